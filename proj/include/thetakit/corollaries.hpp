#pragma once

#include "thetakit/bignum.hpp"
#include "thetakit/registry.hpp"

namespace thetakit {

/// Definitional value of a registry target built from a_numeric and
/// b_numeric (b always at 4m for the combined targets). Throws
/// std::invalid_argument for TargetKind::equal.
RealValue target_numeric(TargetKind kind, const Rational& m, const Rational& n, const PrecisionSpec& prec);

/// Same target assembled from given a_{m,n} and b_{4m,n} values.
RealValue combine_target(TargetKind kind, const RealValue& a, const RealValue& b4m);

struct CorollaryCheck
{
    RealValue closed_form;
    /// Definitional evaluation, or the right-hand expression for equalities.
    RealValue reference;
    int digits = 0;
    bool pass = false;
};

/// Closed form against the definitional evaluation; passes iff they agree
/// to at least target_digits.
CorollaryCheck verify_corollary(const CorollaryRecord& record, const PrecisionSpec& prec);

/// Copy of the record with one multiplicative factor removed from the top
/// level of its expression (negative controls). Throws std::invalid_argument
/// when the expression is not a product.
CorollaryRecord drop_factor(const CorollaryRecord& record, std::size_t index);

} // namespace thetakit
