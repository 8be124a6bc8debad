#include "parafock/ursingle.hpp"

namespace parafock::ursingle {

namespace {

using GR = GaussianRational;

bool unitary_ok(const Matrix2& m)
{
    const GR det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    if (!(det == GR(1)))
        return false;
    // columns orthonormal: sum_k conj(m[k][i]) m[k][j] == delta_ij
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            GR dot = m[0][i].conj() * m[0][j] + m[1][i].conj() * m[1][j];
            if (!(dot == GR(i == j ? 1 : 0)))
                return false;
        }
    }
    return true;
}

}  // namespace

mpq_class ur_norm(const UrState& u)
{
    return u.u1.norm2() + u.u2.norm2();
}

UrState scale(const GaussianRational& lambda, const UrState& u)
{
    return {lambda * u.u1, lambda * u.u2};
}

UrGroupElement UrGroupElement::unitary(const Matrix2& m)
{
    if (!unitary_ok(m))
        throw InvalidGroupElement("unitary element must have det 1 and orthonormal columns");
    UrGroupElement g;
    g.kind_ = Kind::unitary;
    g.matrix_ = m;
    return g;
}

UrGroupElement UrGroupElement::phase(const GaussianRational& phase)
{
    if (phase.norm2() != 1)
        throw InvalidGroupElement("phase element must have modulus 1, got " + phase.to_string());
    UrGroupElement g;
    g.kind_ = Kind::phase;
    g.phase_ = phase;
    return g;
}

UrGroupElement UrGroupElement::antilinear_k()
{
    UrGroupElement g;
    g.kind_ = Kind::antilinear_k;
    return g;
}

UrGroupElement UrGroupElement::identity()
{
    return unitary({{{GR(1), GR(0)}, {GR(0), GR(1)}}});
}

UrGroupElement UrGroupElement::su2(const GaussianRational& a, const GaussianRational& b)
{
    return unitary({{{a, -b.conj()}, {b, a.conj()}}});
}

UrGroupElement UrGroupElement::su2_from_stereographic(const mpq_class& x, const mpq_class& y, const mpq_class& z)
{
    const mpq_class s = x * x + y * y + z * z;
    const mpq_class d = 1 + s;
    // (2x, 2y, 2z, 1 - s) / (1 + s) lies on the unit 3-sphere.
    GR a{mpq_class(2 * x / d), mpq_class(2 * y / d)};
    GR b{mpq_class(2 * z / d), mpq_class((1 - s) / d)};
    return su2(a, b);
}

bool UrGroupElement::is_valid() const
{
    switch (kind_) {
    case Kind::unitary:
        return unitary_ok(matrix_);
    case Kind::phase:
        return phase_.norm2() == 1;
    case Kind::antilinear_k:
        return true;
    }
    return false;
}

UrState apply_group(const UrGroupElement& g, const UrState& u)
{
    if (!g.is_valid())
        throw InvalidGroupElement("apply_group: element violates its invariants");
    switch (g.kind()) {
    case UrGroupElement::Kind::unitary: {
        const auto& m = g.matrix();
        return {m[0][0] * u.u1 + m[0][1] * u.u2, m[1][0] * u.u1 + m[1][1] * u.u2};
    }
    case UrGroupElement::Kind::phase:
        return scale(g.phase_factor(), u);
    case UrGroupElement::Kind::antilinear_k:
        // i sigma_2 = ((0, 1), (-1, 0)) with sigma_2 = ((0, -i), (i, 0))
        return {u.u2.conj(), -u.u1.conj()};
    }
    throw InvalidGroupElement("apply_group: unknown kind");
}

}  // namespace parafock::ursingle
