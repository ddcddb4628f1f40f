#pragma once

#include <Eigen/Dense>
#include <string>
#include <variant>
#include <vector>

#include "qembed/clifford.hpp"
#include "qembed/rng.hpp"

namespace qembed {

struct Tolerance {
    double eps = 1e-9;
    uint64_t seed = 0xC0FFEE;
    int samples = 200;
};

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// x * y = 2<x,y> y - x on the unit sphere.
Vector sphere_op(const Vector& x, const Vector& y, double eps = 1e-9);

/// Rodrigues rotation of x about the axis y by theta (right-hand rule), R^3.
Vector rotation_op(const Vector& x, const Vector& y, double theta);

/// Rotation by theta about the axis x, as a matrix acting on row vectors.
/// theta = pi is rejected (ThetaPi): that case lives in Conj(Spin(3)), use
/// the spherical embedding instead.
Matrix theta_embed(const Vector& x, double theta, double eps = 1e-9);

/// k-plane in R^n spanned by orthonormal frame rows; when oriented, the row
/// order carries the orientation.
struct SubspaceFrame {
    Matrix frame; // k x n, orthonormal rows
    bool oriented = false;

    int n() const { return static_cast<int>(frame.cols()); }
    int k() const { return static_cast<int>(frame.rows()); }
};

SubspaceFrame make_frame(Matrix rows, bool oriented, double eps = 1e-9);

/// Reverse the orientation (last frame row negated).
SubspaceFrame reverse_orientation(const SubspaceFrame& v);

/// 2 P_W - I, the symmetric orthogonal reflection fixing W.
Matrix reflection_matrix(const SubspaceFrame& w);

/// V * W: V reflected through W; an oriented V passes its orientation on.
SubspaceFrame grassmann_op(const SubspaceFrame& v, const SubspaceFrame& w, double eps = 1e-9);

/// V_0 g -> g^{-1} h_{(n,k)} g, computed representative-free as 2 F^T F - I.
Matrix grassmann_embed(const SubspaceFrame& v);

/// Deterministic completion to an element of SO(n) whose first k rows are
/// the frame (Gram-Schmidt over the standard basis; the last completed row
/// absorbs the determinant fix).
Matrix complete_to_rotation(const SubspaceFrame& v, double eps = 1e-9);

/// Lift of the block reflection diag(E_k, -E_{n-k}). For n-k even this is
/// lift_orthogonal of the matrix (the blade e_{k+1}...e_n); likewise when n
/// is even. When n and n-k are both odd no product of line reflections
/// projects onto the matrix, and the generator blade e_{k+1}...e_n is used:
/// it projects onto the negated reflection but realizes the same conjugation
/// action on the oriented Grassmannian.
VersorElement oriented_reflection_lift(int n, int k);

/// Sign epsilon(n,k) with projection(oriented_grassmann_embed(V)) =
/// epsilon * grassmann_embed(V).
inline int oriented_projection_sign(int n, int k) {
    return (n % 2 == 1 && (n - k) % 2 == 1) ? -1 : 1;
}

/// V_0 g~ -> g~^{-1} h~_{(n,k)} g~ in Spin(n) (n-k even) or Pin+(n)
/// (n-k odd).
VersorElement oriented_grassmann_embed(const SubspaceFrame& v, double eps = 1e-9);

/// Spherical quandle embedding of x in S^n, n+1 = dim(x): the half-angle
/// O(2) reflection for n = 1, the grade-1 vector x for odd n >= 3, and
/// omega * x for even n (omega the central top blade of Cl(n+1)).
std::variant<Eigen::Matrix2d, VersorElement> spherical_embed(const Vector& x, double eps = 1e-9);

struct Quaternion {
    double w = 0, x = 0, y = 0, z = 0;

    Quaternion operator*(const Quaternion& o) const {
        return {w * o.w - x * o.x - y * o.y - z * o.z, w * o.x + x * o.w + y * o.z - z * o.y,
                w * o.y + y * o.w + z * o.x - x * o.z, w * o.z + z * o.w + x * o.y - y * o.x};
    }
    double dist(const Quaternion& o) const {
        return std::max(std::max(std::abs(w - o.w), std::abs(x - o.x)),
                        std::max(std::abs(y - o.y), std::abs(z - o.z)));
    }
};

/// Even Cl(3) -> H with 1 -> 1, e2e3 -> i, e1e2 -> j, e3e1 -> k; this basis
/// pairing makes the map multiplicative for Hamilton quaternions.
Quaternion spin3_quaternion_bridge(const CliffordElement& even_element, double tol = 1e-9);
inline Quaternion spin3_quaternion_bridge(const VersorElement& v, double tol = 1e-9) {
    return spin3_quaternion_bridge(v.element, tol);
}

/// Oriented blade coordinates (k x k minors over ascending column subsets);
/// equal frames of one oriented plane give equal coordinates, orientation
/// reversal negates them.
Vector plucker_coordinates(const SubspaceFrame& v);

/// Distance separating two subspaces (projector distance; plucker distance
/// for oriented frames, so reversed orientations are far apart).
double frame_distance(const SubspaceFrame& a, const SubspaceFrame& b);

Vector random_unit_vector(SampleRng& rng, int dim);
SubspaceFrame random_frame(SampleRng& rng, int n, int k, bool oriented);
Matrix random_rotation(SampleRng& rng, int n);

// ---- seeded verification reports (the CLI `geom` surface) ----

struct CheckLine {
    std::string name;
    double max_residual = 0;
    double tolerance = 0;
    bool pass = false;
};

struct GeomReport {
    std::string family;
    std::vector<CheckLine> checks;

    bool pass() const {
        for (const CheckLine& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

GeomReport check_sphere(int n, const Tolerance& tol);
GeomReport check_rotation(double theta, const Tolerance& tol);
GeomReport check_grassmann(int n, int k, bool oriented, const Tolerance& tol);

} // namespace qembed
