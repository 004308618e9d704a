#pragma once

/**
 * The initial discrete parts of the six Lagrange spectra: generated
 * families for the two cases with a Markoff-type description, plus the
 * cited boundary constants for the others.  A spectrum value is stored by
 * its exact square r + s*sqrt(m); decimals are for printing only.
 */

#include "stereo/interval.hpp"
#include "stereo/markoff.hpp"
#include "stereo/space.hpp"

#include <string>
#include <vector>

namespace stereo {

struct SpectrumValue {
    // value^2 = sq_r + sq_s * sqrt(m); m = 1 whenever sq_s = 0.
    Rational sq_r, sq_s;
    Int m = 1;
    std::string generator;   // "x=5", "y=3", or "cited: ..."
    std::string verbatim;    // the form as printed in the source, for one ambiguous citation

    static SpectrumValue make(Rational r, Rational s, Int m, std::string generator,
                              std::string verbatim = "");

    RatInterval square_enclosure(unsigned prec_bits) const;
    RatInterval value_enclosure(unsigned prec_bits) const;

    /// Exact display of the square, e.g. "14/13 + (8/13)*sqrt(3)".
    std::string square_str() const;
    /// Exact display of the value itself, wrapped in an outer sqrt.
    std::string exact_str() const;
    /// Decimal value with the given significant digits (printing only).
    std::string decimal(unsigned sig_digits = 30) const;

    friend bool operator==(const SpectrumValue& a, const SpectrumValue& b) {
        return a.sq_r == b.sq_r && a.sq_s == b.sq_s && a.m == b.m;
    }
};

/// Strict value order; equal squares compare equal regardless of provenance.
bool spectrum_less(const SpectrumValue& a, const SpectrumValue& b);

/// The generated family of the case, sorted ascending.  Only S1_I and
/// S2_I have one; the other cases throw "only cited constants available".
std::vector<SpectrumValue> generated_spectrum(SpaceCase space, const Int& bound);

/// Boundary constants quoted for the case (minima, smallest limit points).
std::vector<SpectrumValue> cited_constants(SpaceCase space);

/// Generated family where one exists, cited constants otherwise; sorted.
std::vector<SpectrumValue> discrete_spectrum(SpaceCase space, const Int& bound);

/// Table with columns value^2 (exact), value (30 digits), generator, case.
std::string spectrum_csv(SpaceCase space, const std::vector<SpectrumValue>& values);

}  // namespace stereo
