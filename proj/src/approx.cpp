#include "stereo/approx.hpp"

#include "stereo/errors.hpp"
#include "stereo/graph.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace stereo {

TargetNumber TargetNumber::quadratic(Rational p, Rational q, Int m) {
    if (m < 1) throw std::invalid_argument("TargetNumber: radicand must be positive");
    // Pull square factors into the rational coefficient.
    for (Int d = 2; d * d <= m; ++d)
        while (m % (d * d) == 0) {
            m /= d * d;
            q *= Rational(d);
        }
    TargetNumber t;
    if (m == 1 || q == 0) {
        t.p_ = p + q * (m == 1 ? 1 : 0);
        t.q_ = 0;
        t.m_ = 1;
    } else {
        t.p_ = std::move(p);
        t.q_ = std::move(q);
        t.m_ = std::move(m);
    }
    return t;
}

TargetNumber TargetNumber::golden() { return quadratic(Rational(1, 2), Rational(1, 2), 5); }

TargetNumber TargetNumber::sqrt_of(const Int& m) { return quadratic(0, 1, m); }

RatInterval TargetNumber::enclosure(unsigned prec_bits) const {
    RatInterval v(p_);
    if (q_ != 0) v = v + RatInterval(q_) * sqrt_interval(Rational(m_), prec_bits);
    return v;
}

bool TargetNumber::in_field(KCase field) const {
    switch (field) {
        case KCase::Q: return q_ == 0;
        case KCase::Sqrt2Q: return (q_ == 0 && p_ == 0) || (p_ == 0 && m_ == 2);
        default: throw std::invalid_argument("TargetNumber: complex fields unsupported");
    }
}

std::string TargetNumber::str() const {
    std::ostringstream out;
    if (q_ == 0) {
        out << p_;
    } else {
        if (p_ != 0) out << p_ << (q_ > 0 ? " + " : " - ");
        Rational q = q_ < 0 && p_ != 0 ? Rational(-q_) : q_;
        if (q != 1) out << "(" << q << ")*";
        out << "sqrt(" << m_ << ")";
    }
    return out.str();
}

ApproxSpace ApproxSpace::boundary(KCase field) {
    if (field != KCase::Q && field != KCase::Sqrt2Q)
        throw std::invalid_argument("ApproxSpace: only real boundary fields supported");
    ApproxSpace s;
    s.on_sphere = false;
    s.field = field;
    return s;
}

ApproxSpace ApproxSpace::sphere(SpaceCase space) {
    if (!is_circle_case(space))
        throw std::invalid_argument("ApproxSpace: only 1-sphere cases supported");
    ApproxSpace s;
    s.on_sphere = true;
    s.space = space;
    return s;
}

KCase ApproxSpace::boundary_field() const {
    return on_sphere ? space_spec(space).boundary_field : field;
}

namespace {

/// |v| as an interval, given that the sign of v is determined or v may
/// legitimately contain zero (distance near a tie between two sides).
RatInterval abs_interval(const RatInterval& v) {
    if (v.lo >= 0) return v;
    if (v.hi <= 0) return -v;
    Rational hi = v.hi > -v.lo ? v.hi : -v.lo;
    return {Rational(0), hi};
}

/// Strictly-positive certified distance |target - value|; refines until
/// the lower bound is positive (the target is irrational, so it is).
RatInterval boundary_distance(const TargetNumber& target, const Rational& sqrt2_mult,
                              bool times_sqrt2, unsigned& prec) {
    for (;; prec *= 2) {
        if (prec > 1u << 14)
            throw std::logic_error("boundary_distance: failed to separate from the target");
        RatInterval v = target.enclosure(prec);
        if (times_sqrt2) v = v - RatInterval(sqrt2_mult) * sqrt_interval(Rational(2), prec);
        else v = v - RatInterval(sqrt2_mult);
        RatInterval d = abs_interval(v);
        if (d.lo > 0) return d;
    }
}

struct Candidate {
    KElement z;
    Int height;
    Int klass;
    RatInterval distance;
};

/// Best candidate by certified distance; assumes no exact tie (true for
/// an irrational quadratic target against distinct field elements).
void keep_better(std::optional<Candidate>& best, Candidate cand) {
    if (!best || cand.distance.hi < best->distance.lo) {
        best = std::move(cand);
    } else if (best->distance.hi < cand.distance.lo) {
        // keep current
    } else if (cand.distance.mid() < best->distance.mid()) {
        best = std::move(cand);  // near-tie; deterministic midpoint rule
    }
}

std::vector<ApproximationRecord> finish_records(std::map<Int, Candidate>& per_height) {
    std::vector<ApproximationRecord> records;
    for (auto& [h, cand] : per_height) {
        RatInterval quality = RatInterval(Rational(1)) / (RatInterval(Rational(h)) * cand.distance);
        records.push_back({cand.z, h, cand.klass, cand.distance, quality});
    }
    return records;
}

std::vector<ApproximationRecord> boundary_records(const TargetNumber& target, KCase field,
                                                  const Int& bound) {
    if (target.in_field(field))
        throw std::invalid_argument("best_approximations: target lies in the field");
    std::map<Int, Candidate> per_height;
    unsigned prec = 128;
    auto consider = [&](const KElement& z, const Int& klass, const Rational& value,
                        bool times_sqrt2) {
        Candidate cand{z, z.height(), klass, boundary_distance(target, value, times_sqrt2, prec)};
        auto [it, fresh] = per_height.try_emplace(cand.height, cand);
        if (!fresh) {
            std::optional<Candidate> best = it->second;
            keep_better(best, cand);
            it->second = *best;
        }
    };
    if (field == KCase::Q) {
        for (Int q = 1; q <= bound; ++q) {
            RatInterval scaled = target.enclosure(prec) * RatInterval(Rational(q));
            Int pm = round_nearest(scaled.mid());
            for (Int p = pm - 1; p <= pm + 1; ++p) {
                if (gcd(p < 0 ? Int(-p) : p, q) != 1) continue;
                consider(KElement::from_rational(Rational(p, q)), q, Rational(p, q), false);
            }
        }
    } else {
        // Values sqrt2 * p/q (q odd, height q^2) and sqrt2 * p/(2q)
        // (p odd, height 2 q^2); p is near q*target/sqrt2 resp. double it.
        RatInterval inv_sqrt2 = RatInterval(Rational(1)) / sqrt_interval(Rational(2), prec);
        for (Int q = 1; q <= bound; q += 2) {
            RatInterval scaled = target.enclosure(prec) * RatInterval(Rational(q)) * inv_sqrt2;
            Int pm = round_nearest(scaled.mid());
            for (Int p = pm - 1; p <= pm + 1; ++p) {
                if (gcd(p < 0 ? Int(-p) : p, q) != 1) continue;
                consider(KElement::from_sqrt2_multiple(Rational(p, q)), q, Rational(p, q), true);
            }
        }
        for (Int q = 1; q <= bound; ++q) {
            RatInterval scaled =
                target.enclosure(prec) * RatInterval(Rational(2 * q)) * inv_sqrt2;
            Int pm = round_nearest(scaled.mid());
            for (Int p = pm - 2; p <= pm + 2; ++p) {
                if (p % 2 == 0) continue;
                if (gcd(p < 0 ? Int(-p) : p, q) != 1) continue;
                consider(KElement::from_sqrt2_multiple(Rational(p, 2 * q)), q,
                         Rational(p, 2 * q), true);
            }
        }
    }
    return finish_records(per_height);
}

std::vector<ApproximationRecord> sphere_records(const TargetNumber& target, SpaceCase space,
                                                const Int& bound) {
    const SpaceSpec& spec = space_spec(space);
    if (target.in_field(spec.boundary_field))
        throw std::invalid_argument("best_approximations: target lies in the field");
    unsigned prec = 96;
    std::vector<RatInterval> tcoords = target_sphere_coords(target, space, prec);
    std::map<Int, Candidate> per_height;
    for (const KElement& z : enumerate_boundary_elements(space, bound)) {
        SpherePoint P = map_to_sphere(z, space, /*allow_infinity=*/true);
        RatVec coords = P.coords();
        RatInterval dist_sq(Rational(0));
        for (size_t i = 0; i < coords.size(); ++i) {
            RatInterval d = tcoords[i] - RatInterval(coords[i]);
            dist_sq = dist_sq + d * d;
        }
        // Phi(target) is not rational, so the distance is positive; the
        // initial precision is ample for every bound used here.
        if (!(dist_sq.lo > 0)) {
            prec *= 2;
            if (prec > 1u << 14)
                throw std::logic_error("sphere_records: failed to separate from the target");
            tcoords = target_sphere_coords(target, space, prec);
            dist_sq = RatInterval(Rational(0));
            for (size_t i = 0; i < coords.size(); ++i) {
                RatInterval d = tcoords[i] - RatInterval(coords[i]);
                dist_sq = dist_sq + d * d;
            }
        }
        Candidate cand{z, P.height(), P.height(), sqrt_interval(dist_sq, prec)};
        auto [it, fresh] = per_height.try_emplace(cand.height, cand);
        if (!fresh) {
            std::optional<Candidate> best = it->second;
            keep_better(best, cand);
            it->second = *best;
        }
    }
    return finish_records(per_height);
}

}  // namespace

std::vector<RatInterval> target_sphere_coords(const TargetNumber& target, SpaceCase space,
                                              unsigned prec_bits) {
    if (!is_circle_case(space))
        throw std::invalid_argument("target_sphere_coords: only 1-sphere cases supported");
    const SpaceSpec& spec = space_spec(space);
    RatInterval t = target.enclosure(prec_bits);
    std::vector<RatInterval> x;
    if (space == SpaceCase::S1_III) {
        x = {t, RatInterval(Rational(1)) - t, RatInterval(Rational(0))};
    } else {
        RatInterval s = sqrt_interval(Rational(2), prec_bits) * t;
        if (space == SpaceCase::S1_I)
            x = {s - RatInterval(Rational(1)), RatInterval(Rational(0))};
        else
            x = {s - RatInterval(Rational(1)), RatInterval(Rational(1)) - s};
    }
    std::vector<RatInterval> diff(x.size());
    RatInterval nsq(Rational(0));
    for (size_t i = 0; i < x.size(); ++i) {
        diff[i] = x[i] - RatInterval(spec.base_point[i]);
        nsq = nsq + diff[i] * diff[i];
    }
    RatInterval scale = RatInterval(2 * spec.RD) / nsq;
    std::vector<RatInterval> out(x.size());
    for (size_t i = 0; i < x.size(); ++i)
        out[i] = RatInterval(spec.base_point[i]) + scale * diff[i];
    return out;
}

std::vector<ApproximationRecord> best_approximations(const TargetNumber& target,
                                                     const ApproxSpace& where,
                                                     const Int& height_bound) {
    if (height_bound < 1)
        throw std::invalid_argument("best_approximations: bound must be >= 1");
    return where.on_sphere ? sphere_records(target, where.space, height_bound)
                           : boundary_records(target, where.field, height_bound);
}

RatInterval estimate_lagrange(const TargetNumber& target, const ApproxSpace& where,
                              const Int& height_bound) {
    std::vector<ApproximationRecord> records = best_approximations(target, where, height_bound);
    Rational half = Rational(height_bound, 2);
    RatInterval sup;
    bool any = false;
    for (const auto& r : records) {
        if (Rational(r.klass) <= half) continue;
        if (!any) {
            sup = r.quality;
            any = true;
        } else {
            if (r.quality.lo > sup.lo) sup.lo = r.quality.lo;
            if (r.quality.hi > sup.hi) sup.hi = r.quality.hi;
        }
    }
    if (!any) throw std::invalid_argument("estimate_lagrange: no records in the tail range");
    Rational pad = Rational(4, height_bound);
    return {sup.lo - pad, sup.hi + pad};
}

Rational transfer_identity_check(SpaceCase space, const KElement& z, const KElement& w) {
    if (z == w) throw std::invalid_argument("transfer_identity_check: equal points");
    const SpaceSpec& spec = space_spec(space);
    SpherePoint Pz = map_to_sphere(z, space), Pw = map_to_sphere(w, space);
    RatVec dz = sub(Pw.coords(), Pz.coords());
    Rational chord_sq = dot(dz, dz);
    Rational hz = Rational(Pz.height());
    Rational hk = Rational(z.height());
    Rational lhs = (hz * hz * chord_sq) / (hk * hk * boundary_distance_sq(z, w));
    RatVec fz = sub(phi_plane(z, space), spec.base_point);
    RatVec fw = sub(phi_plane(w, space), spec.base_point);
    Rational rhs = (spec.C * spec.C).rational_value() * dot(fz, fz) / dot(fw, fw);
    if (lhs != rhs)
        throw invariant_violation("transfer identity violated at " + z.str() + ", " + w.str());
    return lhs;
}

}  // namespace stereo
