#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "enumgeo/integer.hpp"
#include "enumgeo/invariants.hpp"

namespace enumgeo {

/// Families of reportable counts. (Distinct from the memo Family: E6 and CT
/// are closed-form evaluations that never enter the recursion cache.)
enum class Counter { N, C, T, E6, CT };

std::string_view counter_tag(Counter c) noexcept;
std::optional<Counter> counter_from_tag(std::string_view tag) noexcept;

/// Number of integer parameters each counter takes:
/// N(d,m)  C(d,m,n)  T(d1,d2,m1,m2,n)  E6(n)  CT(m1,m2,n).
int counter_arity(Counter c) noexcept;

/// Names of those parameters, for table headers.
std::span<const std::string_view> counter_param_names(Counter c) noexcept;

/// Dispatches to the matching engine / ring operation.
ExactInteger evaluate_counter(const InvariantEngine& engine, Counter c,
                              std::span<const long> params);

/// One expected value, embedded in the binary so verification runs offline.
struct GoldenRecord {
    Counter family;
    std::vector<long> params;
    std::string expected;  // decimal
    std::string source;    // where the value is independently established
};

/// The full embedded regression set: 21 cuspidal counts, 16 tangency counts,
/// 9 cuspidal-cubic/tangent-line counts, 3 E6 counts and 7 Kontsevich-number
/// checks.
const std::vector<GoldenRecord>& golden_records();

}  // namespace enumgeo
