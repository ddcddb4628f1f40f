#include "qembed/clifford.hpp"

#include <bit>
#include <cmath>

namespace qembed {

CliffordElement::CliffordElement(int dim) : dim_(dim) {
    if (dim < 1 || dim > kMaxDim)
        fail(Err::CapExceeded, "Clifford dimension " + std::to_string(dim) + " outside 1.." +
                                   std::to_string(kMaxDim));
    coeffs_.assign(size_t{1} << dim, 0.0);
}

CliffordElement CliffordElement::scalar(int dim, double value) {
    CliffordElement e(dim);
    e.coeffs_[0] = value;
    return e;
}

CliffordElement CliffordElement::basis_vector(int dim, int axis) {
    if (axis < 0 || axis >= dim) fail(Err::BadInput, "basis axis out of range");
    CliffordElement e(dim);
    e.coeffs_[uint32_t{1} << axis] = 1.0;
    return e;
}

CliffordElement CliffordElement::blade(int dim, uint32_t mask, double value) {
    CliffordElement e(dim);
    if (mask >= e.coeffs_.size()) fail(Err::BadInput, "blade mask out of range");
    e.coeffs_[mask] = value;
    return e;
}

CliffordElement CliffordElement::vector(const Eigen::VectorXd& coords) {
    CliffordElement e(static_cast<int>(coords.size()));
    for (int i = 0; i < coords.size(); ++i) e.coeffs_[uint32_t{1} << i] = coords[i];
    return e;
}

double CliffordElement::norm() const {
    double s = 0;
    for (double c : coeffs_) s += c * c;
    return std::sqrt(s);
}

double CliffordElement::max_abs_diff(const CliffordElement& other) const {
    if (dim_ != other.dim_) fail(Err::DimensionMismatch, "elements live in different algebras");
    double m = 0;
    for (size_t i = 0; i < coeffs_.size(); ++i)
        m = std::max(m, std::abs(coeffs_[i] - other.coeffs_[i]));
    return m;
}

bool CliffordElement::approx_equal(const CliffordElement& other, double tol) const {
    return max_abs_diff(other) <= tol;
}

CliffordElement CliffordElement::operator+(const CliffordElement& o) const {
    if (dim_ != o.dim_) fail(Err::DimensionMismatch, "elements live in different algebras");
    CliffordElement r(dim_);
    for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = coeffs_[i] + o.coeffs_[i];
    return r;
}

CliffordElement CliffordElement::operator-(const CliffordElement& o) const {
    if (dim_ != o.dim_) fail(Err::DimensionMismatch, "elements live in different algebras");
    CliffordElement r(dim_);
    for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = coeffs_[i] - o.coeffs_[i];
    return r;
}

CliffordElement CliffordElement::operator-() const {
    CliffordElement r(dim_);
    for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = -coeffs_[i];
    return r;
}

CliffordElement CliffordElement::operator*(double s) const {
    CliffordElement r(dim_);
    for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = coeffs_[i] * s;
    return r;
}

Eigen::VectorXd CliffordElement::grade1_coords() const {
    Eigen::VectorXd v(dim_);
    for (int i = 0; i < dim_; ++i) v[i] = coeffs_[uint32_t{1} << i];
    return v;
}

double CliffordElement::off_grade_mass(int grade) const {
    double m = 0;
    for (size_t mask = 0; mask < coeffs_.size(); ++mask)
        if (std::popcount(static_cast<uint32_t>(mask)) != grade)
            m = std::max(m, std::abs(coeffs_[mask]));
    return m;
}

int blade_product_sign(uint32_t a, uint32_t b) {
    // count generator transpositions needed to interleave b into a
    int swaps = 0;
    a >>= 1;
    while (a) {
        swaps += std::popcount(a & b);
        a >>= 1;
    }
    return (swaps & 1) ? -1 : 1;
}

CliffordElement clifford_mul(const CliffordElement& a, const CliffordElement& b) {
    if (a.dim() != b.dim()) fail(Err::DimensionMismatch, "elements live in different algebras");
    const int n = a.dim();
    std::vector<uint32_t> nza, nzb;
    for (uint32_t m = 0; m < (uint32_t{1} << n); ++m) {
        if (a.coeff(m) != 0.0) nza.push_back(m);
        if (b.coeff(m) != 0.0) nzb.push_back(m);
    }
    CliffordElement r(n);
    for (uint32_t ma : nza)
        for (uint32_t mb : nzb) {
            double v = blade_product_sign(ma, mb) * a.coeff(ma) * b.coeff(mb);
            r.set_coeff(ma ^ mb, r.coeff(ma ^ mb) + v);
        }
    return r;
}

CliffordElement clifford_reverse(const CliffordElement& a) {
    CliffordElement r(a.dim());
    for (uint32_t m = 0; m < (uint32_t{1} << a.dim()); ++m) {
        int k = std::popcount(m);
        double s = (k * (k - 1) / 2) % 2 ? -1.0 : 1.0;
        r.set_coeff(m, s * a.coeff(m));
    }
    return r;
}

CliffordElement clifford_grade(const CliffordElement& a, int k) {
    CliffordElement r(a.dim());
    for (uint32_t m = 0; m < (uint32_t{1} << a.dim()); ++m)
        if (std::popcount(m) == k) r.set_coeff(m, a.coeff(m));
    return r;
}

CliffordElement vector_action(const CliffordElement& v, const CliffordElement& x, double tol) {
    if (v.off_grade_mass(1) > tol) fail(Err::NotGrade1, "v has components outside grade 1");
    if (std::abs(v.norm() - 1.0) > tol) fail(Err::NotUnit, "v is not a unit vector");
    if (x.off_grade_mass(1) > tol) fail(Err::NotGrade1, "x has components outside grade 1");
    return clifford_mul(clifford_mul(v, x), v);
}

Eigen::MatrixXd versor_matrix(const CliffordElement& u, double tol) {
    const int n = u.dim();
    CliffordElement rev = clifford_reverse(u);
    Eigen::MatrixXd m(n, n);
    for (int i = 0; i < n; ++i) {
        CliffordElement img = clifford_mul(clifford_mul(rev, CliffordElement::basis_vector(n, i)), u);
        require_internal(img.off_grade_mass(1) <= tol,
                         "versor sandwich of a vector is not grade 1");
        m.row(i) = img.grade1_coords().transpose();
    }
    return m;
}

namespace {

Eigen::MatrixXd line_reflection(const Eigen::VectorXd& v) {
    const auto n = v.size();
    return 2.0 * v * v.transpose() - Eigen::MatrixXd::Identity(n, n);
}

} // namespace

VersorElement lift_orthogonal(const Eigen::MatrixXd& g, double tol) {
    const int n = static_cast<int>(g.rows());
    if (g.cols() != n) fail(Err::BadInput, "matrix is not square");
    if (n < 1 || n > CliffordElement::kMaxDim)
        fail(Err::CapExceeded, "dimension " + std::to_string(n) + " outside the Clifford cap");
    double ortho_defect =
        (g * g.transpose() - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff();
    if (ortho_defect > tol)
        fail(Err::NotOrthogonal, "||g g^T - I|| = " + std::to_string(ortho_defect));

    constexpr double kSnap = 1e-14;
    Eigen::MatrixXd b = g;
    std::vector<Eigen::VectorXd> factors; // application order; versor is the reversed product

    // peel rows to +-e_i; the branch choice keeps the reflection axis away
    // from the degenerate direction
    for (int i = 0; i < n; ++i) {
        Eigen::VectorXd r = b.row(i).transpose();
        Eigen::VectorXd ei = Eigen::VectorXd::Zero(n);
        ei[i] = 1.0;
        if ((r - ei).cwiseAbs().maxCoeff() <= kSnap || (r + ei).cwiseAbs().maxCoeff() <= kSnap)
            continue;
        Eigen::VectorXd v = r.dot(ei) >= 0.0 ? Eigen::VectorXd(r + ei) : Eigen::VectorXd(r - ei);
        v.normalize();
        b = b * line_reflection(v);
        factors.push_back(std::move(v));
    }

    // residual must be a signed permutation-free diagonal
    std::vector<int> negatives;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            if (i != j)
                require_internal(std::abs(b(i, j)) <= 1e-9, "peeling left a non-diagonal residual");
        require_internal(std::abs(std::abs(b(i, i)) - 1.0) <= 1e-9,
                         "peeling left a non-unit diagonal");
        if (b(i, i) < 0) negatives.push_back(i);
    }

    std::vector<int> flips;
    if (negatives.size() % 2 == 0) {
        flips = negatives;
    } else if (n % 2 == 0) {
        // an odd sign pattern equals the complementary even one composed with
        // coordinate line reflections
        std::vector<bool> neg(n, false);
        for (int i : negatives) neg[i] = true;
        for (int i = 0; i < n; ++i)
            if (!neg[i]) flips.push_back(i);
    } else {
        fail(Err::NotLiftable,
             "det = -1 in odd dimension is not a product of line reflections");
    }
    // descending application order yields the ascending blade as the product
    for (auto it = flips.rbegin(); it != flips.rend(); ++it) {
        Eigen::VectorXd v = Eigen::VectorXd::Zero(n);
        v[*it] = 1.0;
        factors.push_back(std::move(v));
    }

    // normalize odd-dimension lifts to even parity via the central top blade
    if (n % 2 == 1 && factors.size() % 2 == 1) {
        for (int i = n - 1; i >= 0; --i) {
            Eigen::VectorXd v = Eigen::VectorXd::Zero(n);
            v[i] = 1.0;
            factors.push_back(std::move(v));
        }
    }

    CliffordElement u = CliffordElement::scalar(n, 1.0);
    for (const Eigen::VectorXd& v : factors) u = clifford_mul(CliffordElement::vector(v), u);
    return VersorElement{std::move(u), static_cast<int>(factors.size())};
}

Eigen::MatrixXd projection(const VersorElement& v, double tol) {
    return versor_matrix(v.element, tol);
}

} // namespace qembed
