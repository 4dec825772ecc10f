#pragma once

#include <gmpxx.h>

#include <json.hpp>

#include <string>
#include <vector>

#include "twistkit/cocycle.hpp"
#include "twistkit/grading.hpp"
#include "twistkit/scalar.hpp"

namespace twistkit {

// Dense matrix over Scalar, row major.
class Matrix {
public:
    Matrix() = default;
    Matrix(size_t rows, size_t cols);

    static Matrix identity(size_t n);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Scalar& at(size_t i, size_t j);
    const Scalar& at(size_t i, size_t j) const;

    Matrix operator+(const Matrix& other) const;
    Matrix operator-(const Matrix& other) const;
    Matrix operator*(const Matrix& other) const;
    Matrix scale(const Scalar& factor) const;
    bool operator==(const Matrix& other) const;
    bool operator!=(const Matrix& other) const { return !(*this == other); }
    bool is_zero() const;

    Scalar trace() const;
    std::vector<Scalar> flatten() const { return entries_; }

private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<Scalar> entries_;
};

// Row rank over the fraction field of the scalar ring, computed
// fraction-free so every division stays exact.
unsigned matrix_rank(std::vector<std::vector<Scalar>> rows);

// A finite-dimensional module over the twisted enveloping algebra in its
// X, Y, Z presentation: XZ + ZX = 2X, YZ + ZY = -2Y, X^2 - Y^2 = Z.
// Z is diagonal in the stored basis, eigenvalues strictly decreasing.
struct MatrixModule {
    std::string family;  // "E", "A" or "B"
    unsigned n = 0;
    int sign = 0;  // +1 or -1 for the odd families, 0 for E
    unsigned dim = 0;
    Matrix X, Y, Z;

    std::string label() const;  // "E_2", "A_2^+", ...
};

// The even module of dimension 2n+1, basis ordered by decreasing
// Z-eigenvalue (v_0, w_{n-1}, v_1, ..., v_n).  E_0 is the trivial module.
MatrixModule build_E(unsigned n);
// The odd module of dimension n, n >= 1; sign picks the branch of the
// boundary action.
MatrixModule build_A(unsigned n, int sign);
// The odd module of dimension n+1 with the extra lowest vector u, stored
// in the scaling where Y v_0 = u and Y u = (2n+1) v_0.
MatrixModule build_B(unsigned n, int sign);

// Exact check of the three defining relations.
bool verify_relations(const MatrixModule& m);

// Burnside criterion: the unital algebra generated by X, Y, Z has full
// dimension dim^2.  Stable under field extension, so this certifies
// absolute simplicity.
bool is_simple(const MatrixModule& m);

// Ladder data read off a module with diagonal multiplicity-free Z: the
// eigenvalues of X^2 and Y^2 along the spectrum and the sequence
// c_k = y2(4k - 2 - lambda0) for every k where that eigenvalue exists.
struct LadderData {
    mpq_class lambda0;
    std::vector<mpq_class> spectrum;  // strictly decreasing
    std::vector<mpq_class> x2, y2;    // aligned with spectrum
    int ladder_case = 1;              // 1 if Y kills the top eigenvector, else 2
    long first_k = 0;
    std::vector<mpq_class> c;  // c_k for k = first_k, first_k + 1, ...
};

// Extracts the ladder data and verifies the base identity
// x2 - y2 = lambda on every eigenvector, the consecutive recurrence
// c_{k+1} = c_k + 2 lambda0 - 8k - 2, and the case closed form at the
// largest defined k.  Throws on repeated eigenvalues or a violation.
LadderData ladder(const MatrixModule& m);

struct OmnibusReport {
    bool shift_identities = false;   // ZX = X(2 - Z) and ZY = Y(-2 - Z)
    bool multiplicity_free = false;  // Z-spectrum has multiplicity one
    bool top_vector_moves = false;   // dim >= 3 implies X e_{lambda0} != 0
    bool all_pass() const { return shift_identities && multiplicity_free && top_vector_moves; }
};

OmnibusReport check_omnibus(const MatrixModule& m);

// Exact case analysis of the scalar solutions of the relations: returns
// the five one-dimensional modules A_1^+, A_1^-, B_0^+, B_0^-, E_0.
std::vector<MatrixModule> classify_dim1();

// Pairwise non-isomorphism witness: the Z-spectrum together with the
// traces of X and Y (a trace picks up the sign on the fixed eigenspace,
// which is all that separates the +/- twins).
bool z_spectra_distinct(const std::vector<MatrixModule>& modules);

// k_sigma[G]: basis the group elements, product g * h = sigma(g,h) (g+h).
struct GroupAlgebra {
    GradingGroup group;
    unsigned scalar_order = Scalar::default_order;
    unsigned dim = 0;
    std::vector<GroupElement> basis;                 // enumerate order
    std::vector<std::vector<Scalar>> product_coeff;  // [i][j] = sigma(g_i, g_j)

    Matrix left_mult(size_t i) const;
    Matrix right_mult(size_t i) const;
};

GroupAlgebra twisted_group_algebra(const GradingGroup& group, const TwoCocycle& sigma);

// Rank of the trace form T(u, v) = trace(L_u L_v) on the basis.
unsigned trace_form_rank(const GroupAlgebra& a);
// Nondegenerate trace form in characteristic zero.
bool is_semisimple(const GroupAlgebra& a);
unsigned center_dimension(const GroupAlgebra& a);

// One JSON report per module: family, dimensions, relation and
// simplicity verdicts, spectrum, ladder and omnibus summaries.
nlohmann::json module_report(const MatrixModule& m);

}  // namespace twistkit
