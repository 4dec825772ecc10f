#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "twistkit/cocycle.hpp"
#include "twistkit/ncpoly.hpp"

namespace twistkit {

// A coproduct assignment: one polynomial per generator of the base set,
// written over the doubled set (unprimed copies first, primed copies
// after, degrees repeated).
struct CoproductSpec {
    GenSet doubled;
    std::vector<NcPoly> images;
};

// The doubled generator set used by coproducts and tensor squares.
GenSet doubled_gens(const GenSet& gens);

// An algebra presentation whose generators carry group degrees.  For a
// catalog entry the cocycle field is the suggested twisting datum; for
// twisted output it is the accumulated twist that produced it (the
// provenance key "cocycle_applied" marks which reading applies).
struct GradedPresentation {
    unsigned scalar_order = Scalar::default_order;
    GenSet gens;
    std::vector<NcPoly> relations;
    std::optional<TwoCocycle> cocycle;
    std::optional<CoproductSpec> coproduct;
    bool no_split = false;
    nlohmann::json provenance = nlohmann::json::object();

    static GradedPresentation from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;
};

// Twist every relation by its kappa scalars.  Generator names are
// mapped to their uppercase-initial forms (x -> X); degrees are kept.
// Inhomogeneous relations split into homogeneous parts unless the
// presentation is marked no_split, in which case they are an error.
// Twisting an already-twisted presentation convolves sigma onto the
// accumulated cocycle; twisting anything else attaches sigma itself.
GradedPresentation twist_presentation(const GradedPresentation& p, const TwoCocycle& sigma);

// Tensor square construction: generators of q get primes appended, and
// each primed generator V' crosses an unprimed U through
// V'U = b(deg U, deg V') UV'.
GradedPresentation braided_tensor(const GradedPresentation& p, const GradedPresentation& q,
                                  const Bicharacter& b);

// Rescale each word u v' of every image, u unprimed of degree g and v'
// primed of degree h, by sigma(h, g)^-1, and rename generators as
// twist_presentation does.  Single letters pick up no scalar.
CoproductSpec twist_coproduct(const CoproductSpec& delta, const TwoCocycle& sigma);

// Orient every relation into a rewrite rule: the leading word becomes
// the left side (it must have exactly two letters) and the rest, made
// monic, the right side.
RewriteSystem rewrite_system(const GradedPresentation& p);

struct HomomorphismReport {
    bool holds = true;
    std::string details;
};

// Check that sending generator i of the source to images[i] kills every
// source relation modulo the target relations.  The target system must
// be locally confluent; images live over the target generators.
HomomorphismReport verify_homomorphism(const std::vector<NcPoly>& images,
                                       const GradedPresentation& source,
                                       const GradedPresentation& target);

// The partially defined composition of points on the three curves cut
// out by the twisted quadric over the reals: two circles (y resp. z
// axis) and a hyperbola (t axis).
enum class Curve { C1, C2, H };

using Point = std::array<NcPoly, 4>;

// Formal commuting coordinates x, y, z, t, x', y', z', t' for symbolic
// point composition.
GenSet point_symbols();

// Compose two points through the twisted coproduct.  Points are
// coordinate vectors over point_symbols(); the first point uses the
// unprimed slots of the formulas, the second the primed ones.  Points
// must lie on the named curve and satisfy the composability conditions.
Point group_law_points(Curve curve, const Point& p, const Point& q, const GenSet& symbols);

}  // namespace twistkit
