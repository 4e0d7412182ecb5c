#include "enumgeo/memo.hpp"

#include <algorithm>
#include <exception>

namespace enumgeo {

std::string_view family_tag(Family f) noexcept {
    switch (f) {
        case Family::N: return "N";
        case Family::Phi1: return "Phi1";
        case Family::Phi2: return "Phi2";
        case Family::T: return "T";
        case Family::C: return "C";
        case Family::CThm: return "Cthm";
    }
    return "?";
}

std::optional<Family> family_from_tag(std::string_view tag) noexcept {
    for (Family f : {Family::N, Family::Phi1, Family::Phi2, Family::T, Family::C, Family::CThm})
        if (tag == family_tag(f)) return f;
    return std::nullopt;
}

namespace {
InvariantKey make_key(Family f, std::initializer_list<long> idx) {
    InvariantKey k;
    k.family = f;
    int i = 0;
    for (long v : idx) k.p[i++] = static_cast<std::int32_t>(v);
    return k;
}
}  // namespace

InvariantKey InvariantKey::n(long d, long m) { return make_key(Family::N, {d, m}); }
InvariantKey InvariantKey::phi1(long k, long d, long j, long m) {
    return make_key(Family::Phi1, {k, d, j, m});
}
InvariantKey InvariantKey::phi2(long d, long j1, long j2, long m) {
    return make_key(Family::Phi2, {d, j1, j2, m});
}
InvariantKey InvariantKey::tangency(long d1, long d2, long m1, long m2, long n) {
    return make_key(Family::T, {d1, d2, m1, m2, n});
}
InvariantKey InvariantKey::cusp(Family which, long d, long m, long n) {
    return make_key(which, {d, m, n});
}

std::string InvariantKey::to_string() const {
    std::string s(family_tag(family));
    s += '(';
    const int arity = family_arity(family);
    for (int i = 0; i < arity; ++i) {
        if (i > 0) s += ',';
        s += std::to_string(p[i]);
    }
    s += ')';
    return s;
}

ExactRational MemoStore::get_or_compute(const InvariantKey& key,
                                        const std::function<ExactRational()>& compute) {
    std::promise<ExactRational> promise;
    {
        std::unique_lock lock(mu_);
        if (auto it = done_.find(key); it != done_.end()) return it->second;
        if (auto it = inflight_.find(key); it != inflight_.end()) {
            auto fut = it->second;
            lock.unlock();
            return fut.get();
        }
        inflight_.emplace(key, promise.get_future().share());
    }

    ExactRational value;
    try {
        value = compute();
    } catch (...) {
        std::lock_guard lock(mu_);
        inflight_.erase(key);
        promise.set_exception(std::current_exception());
        throw;
    }

    {
        std::lock_guard lock(mu_);
        done_.emplace(key, value);
        inflight_.erase(key);
    }
    promise.set_value(value);
    return value;
}

std::optional<ExactRational> MemoStore::lookup(const InvariantKey& key) const {
    std::lock_guard lock(mu_);
    if (auto it = done_.find(key); it != done_.end()) return it->second;
    return std::nullopt;
}

void MemoStore::insert(const InvariantKey& key, ExactRational value) {
    std::lock_guard lock(mu_);
    done_.insert_or_assign(key, std::move(value));
}

std::vector<std::pair<InvariantKey, ExactRational>> MemoStore::snapshot() const {
    std::vector<std::pair<InvariantKey, ExactRational>> out;
    {
        std::lock_guard lock(mu_);
        out.reserve(done_.size());
        for (const auto& [k, v] : done_) out.emplace_back(k, v);
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

std::size_t MemoStore::size() const {
    std::lock_guard lock(mu_);
    return done_.size();
}

void MemoStore::clear() {
    std::lock_guard lock(mu_);
    done_.clear();
}

}  // namespace enumgeo
