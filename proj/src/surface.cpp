#include "tiltwall/surface.hpp"

#include <stdexcept>

namespace tiltwall {

Surface make_surface(const std::string& preset) {
    const std::string prefix = "del-pezzo:";
    if (preset.rfind(prefix, 0) != 0)
        throw std::invalid_argument("surface: unknown preset \"" + preset + "\"");
    Integer d = parse_integer(preset.substr(prefix.size()));
    if (d < 1 || d > 9)
        throw std::invalid_argument("surface: del-pezzo degree must be in [1,9], got " + d.get_str());
    return Surface{d, Rational(1), Integer(1)};
}

Surface make_surface(const Integer& h_sq, const Rational& lambda, const Integer& chi_o) {
    if (h_sq <= 0) throw std::invalid_argument("surface: H^2 must be positive");
    if (lambda.sign() <= 0) throw std::invalid_argument("surface: lambda must be positive");
    return Surface{h_sq, lambda, chi_o};
}

bool interior_slice_point(const Rational& /*beta*/, const Rational& alpha_sq) {
    return alpha_sq.sign() > 0;
}

SlicePoint::SlicePoint(const Rational& b, const Rational& a_sq) : beta(b), alpha_sq(a_sq) {
    if (!interior_slice_point(b, a_sq))
        throw std::invalid_argument("slice point: alpha^2 must be positive");
}

}  // namespace tiltwall
