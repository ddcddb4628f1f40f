#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "qembed/error.hpp"

namespace qembed {

/// Element of the real Clifford algebra Cl(n) with e_i^2 = +1, as a dense
/// coefficient vector over the 2^n basis blades. Bit i of a blade mask set
/// means the generator e_{i+1} is present; within a blade, generators appear
/// in increasing index.
class CliffordElement {
public:
    static constexpr int kMaxDim = 10;

    explicit CliffordElement(int dim);
    static CliffordElement scalar(int dim, double value);
    /// e_{axis+1}
    static CliffordElement basis_vector(int dim, int axis);
    static CliffordElement blade(int dim, uint32_t mask, double value);
    /// Grade-1 element with the given coordinates.
    static CliffordElement vector(const Eigen::VectorXd& coords);

    int dim() const { return dim_; }
    size_t size() const { return coeffs_.size(); }
    double coeff(uint32_t mask) const { return coeffs_[mask]; }
    void set_coeff(uint32_t mask, double v) { coeffs_[mask] = v; }

    double norm() const;               // coefficient 2-norm
    double max_abs_diff(const CliffordElement& other) const;
    bool approx_equal(const CliffordElement& other, double tol = 1e-12) const;

    CliffordElement operator+(const CliffordElement& o) const;
    CliffordElement operator-(const CliffordElement& o) const;
    CliffordElement operator-() const;
    CliffordElement operator*(double s) const;

    /// Coordinates of the grade-1 part.
    Eigen::VectorXd grade1_coords() const;
    /// Largest |coefficient| outside the given grade.
    double off_grade_mass(int grade) const;

private:
    int dim_;
    std::vector<double> coeffs_;
};

/// Sign picked up when multiplying basis blades a and b (e_i^2 = +1); the
/// product blade is a XOR b.
int blade_product_sign(uint32_t a, uint32_t b);

CliffordElement clifford_mul(const CliffordElement& a, const CliffordElement& b);
CliffordElement clifford_reverse(const CliffordElement& a);
CliffordElement clifford_grade(const CliffordElement& a, int k);

/// v x v for a unit grade-1 v: the point reflection through the line Rv,
/// 2<x,v>v - x on grade-1 arguments.
CliffordElement vector_action(const CliffordElement& v, const CliffordElement& x,
                              double tol = 1e-9);

/// Product of unit vectors. parity/factor bookkeeping kept alongside the
/// dense element; even parity elements are Spin(n) candidates.
struct VersorElement {
    CliffordElement element;
    int factor_count = 0;

    bool even() const { return factor_count % 2 == 0; }
};

/// Matrix of x -> reverse(u) x u on the standard basis (row-vector
/// convention: the i-th row is the image of e_{i+1}). Multiplicative:
/// the matrix of a product is the product of the matrices.
Eigen::MatrixXd versor_matrix(const CliffordElement& u, double tol = 1e-9);

/// Factors an orthogonal g (rows act as x -> xg) into line reflections
/// x -> vxv and returns their Clifford product. Deterministic; for odd n the
/// parity is normalized to even by a central top-blade factor, so lifts of
/// SO(n) land in Spin(n). Matrices with det = -1 in odd dimension are not
/// products of line reflections and are rejected with NotLiftable.
VersorElement lift_orthogonal(const Eigen::MatrixXd& g, double tol = 1e-9);

/// Double covering map: projection(lift_orthogonal(g)) = g, and
/// projection(-u) = projection(u).
Eigen::MatrixXd projection(const VersorElement& v, double tol = 1e-9);

} // namespace qembed
