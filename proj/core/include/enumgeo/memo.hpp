#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <future>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "enumgeo/rational.hpp"

namespace enumgeo {

/// Invariant families that get memoized / serialized. CThm is the cuspidal
/// count computed with the alternative (theorem-statement) recursion; it is
/// a different function of the same indices, so it gets its own tag to keep
/// cache files unambiguous.
enum class Family : std::uint8_t { N, Phi1, Phi2, T, C, CThm };

constexpr int family_arity(Family f) noexcept {
    switch (f) {
        case Family::N: return 2;       // d, m
        case Family::Phi1: return 4;    // k, d, j, m
        case Family::Phi2: return 4;    // d, j1, j2, m
        case Family::T: return 5;       // d1, d2, m1, m2, n
        case Family::C: return 3;       // d, m, n
        case Family::CThm: return 3;
    }
    return 0;
}

std::string_view family_tag(Family f) noexcept;
std::optional<Family> family_from_tag(std::string_view tag) noexcept;

/// One invariant instance: family tag plus up to five integer indices
/// (unused slots stay zero and never differentiate keys).
struct InvariantKey {
    Family family{Family::N};
    std::array<std::int32_t, 5> p{};

    static InvariantKey n(long d, long m);
    static InvariantKey phi1(long k, long d, long j, long m);
    static InvariantKey phi2(long d, long j1, long j2, long m);
    static InvariantKey tangency(long d1, long d2, long m1, long m2, long n);
    static InvariantKey cusp(Family which, long d, long m, long n);

    bool operator==(const InvariantKey&) const = default;

    /// "T(1,2,2,4,0)" -- used in error messages and cache files.
    std::string to_string() const;

    /// Ordering by (family, indices); fixes the serialization order.
    friend bool operator<(const InvariantKey& a, const InvariantKey& b) noexcept {
        if (a.family != b.family) return a.family < b.family;
        return a.p < b.p;
    }
};

struct InvariantKeyHash {
    std::size_t operator()(const InvariantKey& k) const noexcept {
        std::size_t h = static_cast<std::size_t>(k.family) + 0x9e3779b97f4a7c15ull;
        for (const auto x : k.p) h = h * 1099511628211ull + static_cast<std::size_t>(x + 1);
        return h;
    }
};

/// Map from invariant key to exact value with atomic get-or-compute:
/// concurrent callers of the same key block until the one in-flight
/// computation finishes and then all observe the same stored value.
/// Recursive computations are fine as long as the dependency relation is
/// acyclic (the lock is not held while user code runs).
class MemoStore {
public:
    ExactRational get_or_compute(const InvariantKey& key,
                                 const std::function<ExactRational()>& compute);

    std::optional<ExactRational> lookup(const InvariantKey& key) const;

    /// Seeds a value (used by cache loading). Overwrites silently; values for
    /// a given key are canonical, so a disagreement could only come from a
    /// foreign cache file.
    void insert(const InvariantKey& key, ExactRational value);

    /// Stable (family, indices)-sorted copy of the contents.
    std::vector<std::pair<InvariantKey, ExactRational>> snapshot() const;

    std::size_t size() const;
    void clear();

private:
    mutable std::mutex mu_;
    std::unordered_map<InvariantKey, ExactRational, InvariantKeyHash> done_;
    std::unordered_map<InvariantKey, std::shared_future<ExactRational>, InvariantKeyHash> inflight_;
};

}  // namespace enumgeo
