#include "twistkit/cocycle.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "twistkit/parse.hpp"

namespace twistkit {

namespace {

Scalar parse_json_scalar(const nlohmann::json& j, unsigned order) {
    if (j.is_number_integer()) return Scalar::integer(j.get<long>(), order);
    if (j.is_string()) return parse_scalar(j.get<std::string>(), order);
    throw std::domain_error("cocycle descriptor: expected an integer or a scalar string");
}

void require_unit(const Scalar& s, const std::string& where) {
    if (!s.is_unit()) throw std::domain_error(where + ": value is not a unit");
}

}  // namespace

Bicharacter::Bicharacter(GradingGroup group, std::vector<std::vector<Scalar>> generator_values,
                         unsigned scalar_order)
    : group_(std::move(group)), order_(scalar_order), gen_values_(std::move(generator_values)) {
    size_t rank = group_.rank();
    if (gen_values_.size() != rank)
        throw std::domain_error("Bicharacter: generator matrix must be rank x rank");
    for (const auto& row : gen_values_) {
        if (row.size() != rank)
            throw std::domain_error("Bicharacter: generator matrix must be rank x rank");
        for (const Scalar& v : row) require_unit(v, "Bicharacter");
    }
}

Bicharacter Bicharacter::alternating(GradingGroup group,
                                     const std::map<std::pair<size_t, size_t>, Scalar>& upper,
                                     unsigned scalar_order) {
    size_t rank = group.rank();
    std::vector<std::vector<Scalar>> values(
        rank, std::vector<Scalar>(rank, Scalar::one(scalar_order)));
    for (const auto& [pair, v] : upper) {
        auto [i, j] = pair;
        if (i >= j || j >= rank)
            throw std::domain_error("Bicharacter::alternating: pair indices must satisfy i < j < rank");
        require_unit(v, "Bicharacter::alternating");
        values[i][j] = v;
        values[j][i] = v.unit_inverse();
    }
    return Bicharacter(std::move(group), std::move(values), scalar_order);
}

Scalar Bicharacter::generator_value(size_t i, size_t j) const {
    if (i >= gen_values_.size() || j >= gen_values_.size())
        throw std::domain_error("Bicharacter::generator_value: index out of range");
    return gen_values_[i][j];
}

Scalar Bicharacter::value(const GroupElement& g, const GroupElement& h) const {
    GroupElement x = group_.reduce(g), y = group_.reduce(h);
    Scalar out = Scalar::one(order_);
    for (size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        for (size_t j = 0; j < y.size(); ++j) {
            if (y[j] == 0) continue;
            out *= gen_values_[i][j].pow(x[i] * y[j]);
        }
    }
    return out;
}

bool Bicharacter::is_alternating() const {
    for (size_t i = 0; i < gen_values_.size(); ++i) {
        if (!gen_values_[i][i].is_one()) return false;
        for (size_t j = i + 1; j < gen_values_.size(); ++j) {
            if (gen_values_[j][i] != gen_values_[i][j].unit_inverse()) return false;
        }
    }
    return true;
}

CoboundaryForm::CoboundaryForm(GradingGroup group, std::vector<Scalar> values,
                               unsigned scalar_order)
    : group_(std::move(group)), order_(scalar_order), values_(std::move(values)) {
    if (!group_.is_finite())
        throw std::domain_error("CoboundaryForm: group must be finite");
    if (values_.size() != group_.order())
        throw std::domain_error("CoboundaryForm: need one value per group element");
    for (const Scalar& v : values_) require_unit(v, "CoboundaryForm");
    if (!values_[0].is_one())
        throw std::domain_error("CoboundaryForm: lambda(0) must be 1");
}

Scalar CoboundaryForm::value(const GroupElement& g) const {
    return values_[group_.element_index(g)];
}

TwoCocycle TwoCocycle::trivial(GradingGroup group, unsigned scalar_order) {
    if (group.is_finite()) {
        size_t n = group.order();
        return table(std::move(group),
                     std::vector<std::vector<Scalar>>(
                         n, std::vector<Scalar>(n, Scalar::one(scalar_order))),
                     scalar_order);
    }
    size_t rank = group.rank();
    return bilinear_q(std::move(group),
                      std::vector<std::vector<long>>(rank, std::vector<long>(rank, 0)),
                      scalar_order);
}

TwoCocycle TwoCocycle::table(GradingGroup group, std::vector<std::vector<Scalar>> values,
                             unsigned scalar_order) {
    if (!group.is_finite()) throw std::domain_error("TwoCocycle::table: group must be finite");
    size_t n = group.order();
    if (values.size() != n)
        throw std::domain_error("TwoCocycle::table: need one row per group element");
    nlohmann::json desc_values = nlohmann::json::array();
    for (const auto& row : values) {
        if (row.size() != n)
            throw std::domain_error("TwoCocycle::table: need one column per group element");
        nlohmann::json desc_row = nlohmann::json::array();
        for (const Scalar& v : row) {
            require_unit(v, "TwoCocycle::table");
            desc_row.push_back(v.str());
        }
        desc_values.push_back(std::move(desc_row));
    }
    TwoCocycle sigma;
    sigma.kind_ = CocycleKind::Table;
    sigma.group_ = std::move(group);
    sigma.order_ = scalar_order;
    sigma.table_ = std::move(values);
    sigma.descriptor_ = nlohmann::json{{"kind", "table"}, {"values", std::move(desc_values)}};
    return sigma;
}

TwoCocycle TwoCocycle::bilinear_q(GradingGroup group, std::vector<std::vector<long>> matrix,
                                  unsigned scalar_order) {
    if (!group.torsion().empty())
        throw std::domain_error("TwoCocycle::bilinear_q: group must be free");
    size_t rank = group.rank();
    if (matrix.size() != rank)
        throw std::domain_error("TwoCocycle::bilinear_q: matrix must be rank x rank");
    for (const auto& row : matrix) {
        if (row.size() != rank)
            throw std::domain_error("TwoCocycle::bilinear_q: matrix must be rank x rank");
    }
    TwoCocycle sigma;
    sigma.kind_ = CocycleKind::BilinearQ;
    sigma.group_ = std::move(group);
    sigma.order_ = scalar_order;
    sigma.descriptor_ = nlohmann::json{{"kind", "bilinear_q"}, {"matrix", matrix}};
    sigma.matrix_ = std::move(matrix);
    return sigma;
}

TwoCocycle TwoCocycle::sigma_v(unsigned scalar_order) {
    Scalar one = Scalar::one(scalar_order), minus = Scalar::integer(-1, scalar_order);
    // Elements in enumerate order: 0, (0,1), (1,0), (1,1).
    std::vector<std::vector<Scalar>> values = {
        {one, one, one, one},
        {one, minus, one, minus},
        {one, minus, minus, one},
        {one, one, minus, minus},
    };
    return table(GradingGroup(0, {2, 2}), std::move(values), scalar_order);
}

TwoCocycle TwoCocycle::from_json(const nlohmann::json& descriptor, const GradingGroup& group,
                                 unsigned scalar_order) {
    if (!descriptor.is_object() || !descriptor.contains("kind"))
        throw std::domain_error("cocycle descriptor: expected an object with a kind");
    std::string kind = descriptor["kind"].get<std::string>();
    if (kind == "table") {
        if (!descriptor.contains("values") || !descriptor["values"].is_array())
            throw std::domain_error("cocycle descriptor: table needs a values matrix");
        std::vector<std::vector<Scalar>> values;
        for (const auto& row : descriptor["values"]) {
            std::vector<Scalar> out_row;
            for (const auto& entry : row) out_row.push_back(parse_json_scalar(entry, scalar_order));
            values.push_back(std::move(out_row));
        }
        return table(group, std::move(values), scalar_order);
    }
    if (kind == "bilinear_q") {
        if (!descriptor.contains("matrix") || !descriptor["matrix"].is_array())
            throw std::domain_error("cocycle descriptor: bilinear_q needs a matrix");
        std::vector<std::vector<long>> matrix;
        for (const auto& row : descriptor["matrix"])
            matrix.push_back(row.get<std::vector<long>>());
        return bilinear_q(group, std::move(matrix), scalar_order);
    }
    if (kind == "bicharacter_split") {
        if (!descriptor.contains("gen_pairs") || !descriptor["gen_pairs"].is_object())
            throw std::domain_error("cocycle descriptor: bicharacter_split needs gen_pairs");
        std::map<std::pair<size_t, size_t>, Scalar> upper;
        for (const auto& [key, value] : descriptor["gen_pairs"].items()) {
            size_t comma = key.find(',');
            if (comma == std::string::npos)
                throw std::domain_error("cocycle descriptor: gen_pairs keys look like \"i,j\"");
            size_t i = std::stoul(key.substr(0, comma));
            size_t j = std::stoul(key.substr(comma + 1));
            upper[{i, j}] = parse_json_scalar(value, scalar_order);
        }
        return cocycle_from_bicharacter(Bicharacter::alternating(group, upper, scalar_order));
    }
    if (kind == "coboundary") {
        if (!descriptor.contains("lambda") || !descriptor["lambda"].is_array())
            throw std::domain_error("cocycle descriptor: coboundary needs a lambda array");
        std::vector<Scalar> values;
        for (const auto& entry : descriptor["lambda"])
            values.push_back(parse_json_scalar(entry, scalar_order));
        return coboundary(CoboundaryForm(group, std::move(values), scalar_order));
    }
    if (kind == "product") {
        if (!descriptor.contains("factors") || !descriptor["factors"].is_array() ||
            descriptor["factors"].empty())
            throw std::domain_error("cocycle descriptor: product needs a factors array");
        TwoCocycle out = from_json(descriptor["factors"][0], group, scalar_order);
        for (size_t i = 1; i < descriptor["factors"].size(); ++i)
            out = convolve(out, from_json(descriptor["factors"][i], group, scalar_order));
        return out;
    }
    throw std::domain_error("cocycle descriptor: unknown kind '" + kind + "'");
}

Scalar TwoCocycle::operator()(const GroupElement& g, const GroupElement& h) const {
    switch (kind_) {
        case CocycleKind::Table:
            return table_[group_.element_index(g)][group_.element_index(h)];
        case CocycleKind::BilinearQ: {
            GroupElement x = group_.reduce(g), y = group_.reduce(h);
            long exponent = 0;
            for (size_t i = 0; i < x.size(); ++i) {
                if (x[i] == 0) continue;
                for (size_t j = 0; j < y.size(); ++j) exponent += x[i] * matrix_[i][j] * y[j];
            }
            return Scalar::q_power(exponent, order_);
        }
        case CocycleKind::BicharacterSplit: {
            GroupElement x = group_.reduce(g), y = group_.reduce(h);
            Scalar out = Scalar::one(order_);
            for (size_t i = 0; i < x.size(); ++i) {
                if (x[i] == 0) continue;
                for (size_t j = 0; j < i; ++j) {
                    if (y[j] == 0) continue;
                    out *= split_values_[j][i].pow(x[i] * y[j]);
                }
            }
            return out;
        }
        case CocycleKind::Coboundary: {
            Scalar lg = lambda_[group_.element_index(g)];
            Scalar lh = lambda_[group_.element_index(h)];
            Scalar lgh = lambda_[group_.element_index(group_.add(g, h))];
            return lg * lh * lgh.unit_inverse();
        }
        case CocycleKind::Product: {
            Scalar out = Scalar::one(order_);
            for (const TwoCocycle& f : factors_) out *= f(g, h);
            return out;
        }
    }
    throw std::logic_error("TwoCocycle: unknown kind");
}

Scalar TwoCocycle::braiding(const GroupElement& g, const GroupElement& h) const {
    return (*this)(h, g) * (*this)(g, h).unit_inverse();
}

CocycleCheck check_cocycle(const TwoCocycle& sigma) {
    const GradingGroup& G = sigma.group();
    std::vector<GroupElement> sample;
    bool exhaustive = G.is_finite();
    if (exhaustive) {
        sample = G.enumerate();
    } else {
        // Bimultiplicative kinds satisfy the identity for structural
        // reasons; spot-check them on a coordinate box.
        std::vector<GroupElement> box;
        for (long c = -2; c <= 2; ++c) {
            for (size_t i = 0; i < G.rank(); ++i) {
                GroupElement e = G.zero();
                e[i] = c;
                box.push_back(e);
            }
        }
        box.push_back(G.zero());
        GroupElement mixed = G.zero();
        for (size_t i = 0; i < G.rank(); ++i) mixed[i] = static_cast<long>(i) + 1;
        box.push_back(mixed);
        sample = std::move(box);
    }
    CocycleCheck report;
    for (const GroupElement& g : sample) {
        for (const GroupElement& h : sample) {
            if (!sigma(g, h).is_unit()) {
                report.valid = false;
                report.witness = {g, h, G.zero()};
                report.details = "value is not a unit";
                return report;
            }
        }
    }
    for (const GroupElement& g : sample) {
        for (const GroupElement& h : sample) {
            for (const GroupElement& k : sample) {
                Scalar lhs = sigma(g, h) * sigma(G.add(g, h), k);
                Scalar rhs = sigma(h, k) * sigma(g, G.add(h, k));
                if (lhs != rhs) {
                    report.valid = false;
                    report.witness = {g, h, k};
                    std::ostringstream msg;
                    msg << "identity fails: " << lhs.str() << " != " << rhs.str();
                    report.details = msg.str();
                    return report;
                }
            }
        }
    }
    report.details = exhaustive ? "exhaustive over all triples"
                                : "bimultiplicative form, verified on a coordinate box";
    return report;
}

Bicharacter derived_bicharacter(const TwoCocycle& sigma) {
    const GradingGroup& G = sigma.group();
    size_t rank = G.rank();
    std::vector<std::vector<Scalar>> values(
        rank, std::vector<Scalar>(rank, Scalar::one(sigma.scalar_order())));
    for (size_t i = 0; i < rank; ++i) {
        GroupElement ei = G.zero();
        ei[i] = 1;
        for (size_t j = 0; j < rank; ++j) {
            GroupElement ej = G.zero();
            ej[j] = 1;
            values[i][j] = sigma.braiding(ei, ej);
        }
    }
    return Bicharacter(G, std::move(values), sigma.scalar_order());
}

TwoCocycle cocycle_from_bicharacter(const Bicharacter& b) {
    if (!b.is_alternating())
        throw std::domain_error("cocycle_from_bicharacter: bicharacter must be alternating");
    size_t rank = b.group().rank();
    TwoCocycle sigma;
    sigma.kind_ = CocycleKind::BicharacterSplit;
    sigma.group_ = b.group();
    sigma.order_ = b.scalar_order();
    sigma.split_values_.assign(rank, std::vector<Scalar>(rank, Scalar::one(b.scalar_order())));
    nlohmann::json pairs = nlohmann::json::object();
    for (size_t i = 0; i < rank; ++i) {
        for (size_t j = 0; j < rank; ++j) {
            sigma.split_values_[i][j] = b.generator_value(i, j);
            if (i < j)
                pairs[std::to_string(i) + "," + std::to_string(j)] =
                    b.generator_value(i, j).str();
        }
    }
    sigma.descriptor_ = nlohmann::json{{"kind", "bicharacter_split"}, {"gen_pairs", pairs}};
    return sigma;
}

TwoCocycle coboundary(const CoboundaryForm& lambda) {
    TwoCocycle sigma;
    sigma.kind_ = CocycleKind::Coboundary;
    sigma.group_ = lambda.group();
    sigma.order_ = lambda.scalar_order();
    sigma.lambda_ = lambda.values();
    nlohmann::json values = nlohmann::json::array();
    for (const Scalar& v : lambda.values()) values.push_back(v.str());
    sigma.descriptor_ = nlohmann::json{{"kind", "coboundary"}, {"lambda", std::move(values)}};
    return sigma;
}

TwoCocycle convolve(const TwoCocycle& sigma, const TwoCocycle& tau) {
    if (sigma.group() != tau.group())
        throw std::domain_error("convolve: cocycles live on different groups");
    TwoCocycle out;
    out.kind_ = CocycleKind::Product;
    out.group_ = sigma.group();
    out.order_ = sigma.scalar_order();
    out.factors_ = {sigma, tau};
    out.descriptor_ = nlohmann::json{
        {"kind", "product"},
        {"factors", nlohmann::json::array({sigma.descriptor(), tau.descriptor()})}};
    return out;
}

std::optional<CoboundaryForm> are_equivalent(const TwoCocycle& sigma, const TwoCocycle& tau) {
    const GradingGroup& G = sigma.group();
    if (G != tau.group())
        throw std::domain_error("are_equivalent: cocycles live on different groups");
    if (!G.is_finite())
        throw std::domain_error("are_equivalent: group must be finite");
    unsigned order = sigma.scalar_order();
    std::vector<GroupElement> elements = G.enumerate();

    // Necessary condition: equivalent cocycles share their bicharacter.
    for (const GroupElement& g : elements)
        for (const GroupElement& h : elements)
            if (sigma.braiding(g, h) != tau.braiding(g, h)) return std::nullopt;

    // ratio = tau / sigma must be the coboundary of the witness.
    auto ratio = [&](const GroupElement& g, const GroupElement& h) {
        return tau(g, h) * sigma(g, h).unit_inverse();
    };
    if (!ratio(G.zero(), G.zero()).is_one()) return std::nullopt;

    // Candidate values on each coordinate generator: roots of unity times
    // the q-powers already seen in the two cocycles.
    long max_q = 0;
    for (const GroupElement& g : elements) {
        for (const GroupElement& h : elements) {
            for (const Scalar& v : {sigma(g, h), tau(g, h)}) {
                long k = v.unit_q_exponent();
                max_q = std::max(max_q, k < 0 ? -k : k);
            }
        }
    }

    std::vector<Scalar> candidates;
    for (unsigned a = 0; a < order; ++a)
        candidates.push_back(Scalar::zeta_power(a, order));
    for (long e = 1; e <= max_q; ++e) {
        size_t base = candidates.size();
        for (size_t i = 0; i < base; ++i) {
            candidates.push_back(candidates[i] * Scalar::q_power(e, order));
            candidates.push_back(candidates[i] * Scalar::q_power(-e, order));
        }
    }

    size_t rank = G.rank();
    std::vector<size_t> choice(rank, 0);
    size_t total = 1;
    for (size_t i = 0; i < rank; ++i) total *= candidates.size();
    for (size_t combo = 0; combo < total; ++combo) {
        size_t c = combo;
        for (size_t i = 0; i < rank; ++i) {
            choice[i] = c % candidates.size();
            c /= candidates.size();
        }
        // Propagate lambda over the whole group along coordinates.
        std::vector<Scalar> lambda(elements.size(), Scalar::one(order));
        bool ok = true;
        for (const GroupElement& g : elements) {
            // find first nonzero coordinate
            size_t i = 0;
            while (i < rank && g[i] == 0) ++i;
            if (i == rank) continue;  // identity
            GroupElement e = G.zero();
            e[i] = 1;
            GroupElement prev = G.sub(g, e);
            size_t gi = G.element_index(g);
            size_t pi = G.element_index(prev);
            lambda[gi] = lambda[pi] * candidates[choice[i]] * ratio(prev, e).unit_inverse();
        }
        // Verify d(lambda) = ratio everywhere.
        for (const GroupElement& g : elements) {
            for (const GroupElement& h : elements) {
                Scalar lhs = lambda[G.element_index(g)] * lambda[G.element_index(h)] *
                             lambda[G.element_index(G.add(g, h))].unit_inverse();
                if (lhs != ratio(g, h)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) break;
        }
        if (ok) return CoboundaryForm(G, std::move(lambda), order);
    }
    return std::nullopt;
}

Scalar GroupAlgebraTensor::coefficient(const GroupElement& g, const GroupElement& h) const {
    return coefficients[group.element_index(g)][group.element_index(h)];
}

bool GroupAlgebraTensor::operator==(const GroupAlgebraTensor& other) const {
    return group == other.group && coefficients == other.coefficients;
}

GroupAlgebraTensor cocycle_to_twist(const TwoCocycle& sigma) {
    const GradingGroup& G = sigma.group();
    if (!G.is_finite()) throw std::domain_error("cocycle_to_twist: group must be finite");
    unsigned order = sigma.scalar_order();
    std::vector<GroupElement> elements = G.enumerate();
    size_t n = elements.size();
    Scalar norm = Scalar::rational(mpq_class(1, static_cast<long>(n * n)), order);
    GroupAlgebraTensor out{G, order,
                           std::vector<std::vector<Scalar>>(
                               n, std::vector<Scalar>(n, Scalar::zero(order)))};
    for (size_t gi = 0; gi < n; ++gi) {
        for (size_t hi = 0; hi < n; ++hi) {
            Scalar sum = Scalar::zero(order);
            for (size_t ci = 0; ci < n; ++ci) {
                for (size_t pi = 0; pi < n; ++pi) {
                    sum += sigma(elements[ci], elements[pi]) *
                           G.pairing(elements[ci], elements[gi], order).unit_inverse() *
                           G.pairing(elements[pi], elements[hi], order).unit_inverse();
                }
            }
            out.coefficients[gi][hi] = sum * norm;
        }
    }
    return out;
}

bool twist_is_lazy(const GroupAlgebraTensor& twist) {
    const GradingGroup& G = twist.group;
    unsigned order = twist.scalar_order;
    std::vector<GroupElement> elements = G.enumerate();
    size_t n = elements.size();
    for (size_t gi = 0; gi < n; ++gi) {
        // Expand F * Delta(u_g) and Delta(u_g) * F over the basis u_a x u_b.
        std::vector<std::vector<Scalar>> left(n, std::vector<Scalar>(n, Scalar::zero(order)));
        std::vector<std::vector<Scalar>> right(n, std::vector<Scalar>(n, Scalar::zero(order)));
        for (size_t xi = 0; xi < n; ++xi) {
            for (size_t yi = 0; yi < n; ++yi) {
                const Scalar& c = twist.coefficients[xi][yi];
                if (c.is_zero()) continue;
                size_t la = G.element_index(G.add(elements[xi], elements[gi]));
                size_t lb = G.element_index(G.add(elements[yi], elements[gi]));
                left[la][lb] += c;
                size_t ra = G.element_index(G.add(elements[gi], elements[xi]));
                size_t rb = G.element_index(G.add(elements[gi], elements[yi]));
                right[ra][rb] += c;
            }
        }
        if (left != right) return false;
    }
    return true;
}

}  // namespace twistkit
