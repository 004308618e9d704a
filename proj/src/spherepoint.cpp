#include "stereo/spherepoint.hpp"

#include <sstream>
#include <stdexcept>

namespace stereo {

SpherePoint SpherePoint::from_coords(SpaceCase space, const RatVec& coords) {
    const SpaceSpec& spec = space_spec(space);
    if (static_cast<int>(coords.size()) != spec.l)
        throw std::invalid_argument("SpherePoint: wrong dimension");
    Int q = 1;
    for (const auto& x : coords) q = q / gcd(q, den(x)) * den(x);  // lcm of denominators
    std::vector<Int> p(coords.size());
    Int g = 0;
    for (size_t i = 0; i < coords.size(); ++i) {
        p[i] = num(coords[i]) * (q / den(coords[i]));
        g = gcd(g, p[i]);
    }
    if (g == 0) throw std::invalid_argument("SpherePoint: zero vector");
    // With the lcm denominator gcd(p, q) = 1 already; primitivity of p
    // alone is the invariant that must hold on the sphere.
    Int pp = 0;
    for (const auto& x : p) pp += x * x;
    if (pp != spec.k * q * q)
        throw std::invalid_argument("SpherePoint: point not on the sphere");
    if (g != 1)
        throw std::invalid_argument("SpherePoint: coordinates not primitive");
    if (spec.plane_W) {
        Int sum = 0;
        for (const auto& x : p) sum += x;
        if (sum != q) throw std::invalid_argument("SpherePoint: plane constraint violated");
    }
    return SpherePoint{space, std::move(p), std::move(q)};
}

RatVec SpherePoint::coords() const {
    RatVec r(p.size());
    for (size_t i = 0; i < p.size(); ++i) r[i] = Rational(p[i], q);
    return r;
}

std::string SpherePoint::str() const {
    std::ostringstream out;
    out << "(";
    for (size_t i = 0; i < p.size(); ++i) out << (i ? "," : "") << p[i];
    out << ")/" << q;
    return out.str();
}

SpherePoint SpherePoint::parse(SpaceCase space, const std::string& text) {
    auto bad = [&] { throw std::invalid_argument("cannot parse sphere point: '" + text + "'"); };
    if (text.empty() || text.front() != '(') bad();
    auto close = text.find(")/");
    if (close == std::string::npos) bad();
    RatVec coords;
    std::string body = text.substr(1, close - 1);
    Int q;
    try {
        q = Int(text.substr(close + 2));
        std::istringstream in(body);
        std::string item;
        while (std::getline(in, item, ',')) coords.push_back(Rational(Int(item), q));
    } catch (const std::exception&) {
        bad();
    }
    if (q <= 0) bad();
    return from_coords(space, coords);
}

std::string SpherePoint::json() const {
    std::ostringstream out;
    out << "{\"case\":\"" << to_string(space) << "\",\"p\":[";
    for (size_t i = 0; i < p.size(); ++i) out << (i ? "," : "") << p[i];
    out << "],\"q\":" << q << ",\"height\":" << q << "}";
    return out.str();
}

}  // namespace stereo
