#ifndef PARAFOCK_URSINGLE_HPP
#define PARAFOCK_URSINGLE_HPP

#include "parafock/exactalg/gaussian_rational.hpp"

#include <array>
#include <stdexcept>

namespace parafock::ursingle {

/// Two-component state (u1, u2) of a single ur. Not necessarily normalized.
struct UrState {
    GaussianRational u1;
    GaussianRational u2;

    friend bool operator==(const UrState&, const UrState&) = default;
};

/// <u|u> = u1* u1 + u2* u2
mpq_class ur_norm(const UrState& u);

UrState scale(const GaussianRational& lambda, const UrState& u);

class InvalidGroupElement : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

using Matrix2 = std::array<std::array<GaussianRational, 2>, 2>;

/// Element of the ur symmetry group: an SU(2) matrix, a U(1) phase, or the
/// antilinear map K u = i sigma_2 u*.
class UrGroupElement {
public:
    enum class Kind { unitary, phase, antilinear_k };

    /// Throws InvalidGroupElement unless det m == 1 and the columns are
    /// orthonormal.
    static UrGroupElement unitary(const Matrix2& m);
    /// Throws InvalidGroupElement unless |phase|^2 == 1.
    static UrGroupElement phase(const GaussianRational& phase);
    static UrGroupElement antilinear_k();
    static UrGroupElement identity();

    /// SU(2) element ((a, -b*), (b, a*)); requires |a|^2 + |b|^2 == 1.
    static UrGroupElement su2(const GaussianRational& a, const GaussianRational& b);

    /// Exact SU(2) element from a rational point (x, y, z) of R^3 pushed to S^3
    /// by inverse stereographic projection. Every rational point of S^3 other
    /// than the pole arises this way.
    static UrGroupElement su2_from_stereographic(const mpq_class& x, const mpq_class& y, const mpq_class& z);

    Kind kind() const { return kind_; }
    const Matrix2& matrix() const { return matrix_; }
    const GaussianRational& phase_factor() const { return phase_; }

    /// Re-checks the invariants of the element's kind.
    bool is_valid() const;

private:
    UrGroupElement() = default;

    Kind kind_ = Kind::unitary;
    Matrix2 matrix_{};
    GaussianRational phase_{1};
};

/// Throws InvalidGroupElement if g fails its invariants.
UrState apply_group(const UrGroupElement& g, const UrState& u);

}  // namespace parafock::ursingle

#endif
