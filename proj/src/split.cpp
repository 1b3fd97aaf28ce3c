#include "idxsplit/split.hpp"

#include <ostream>

#include "idxsplit/intdiv.hpp"

namespace idxsplit {
namespace {

// Boundary values of one split before narrowing; halves are [lo, hi).
struct Bounds {
    Wide left_lo;
    Wide left_hi;
    std::optional<Wide> excluded;
    Wide right_lo;
    Wide right_hi;
};

bool excludes_element(SplitPolicy policy, Wide n) {
    switch (policy) {
    case SplitPolicy::Natural:
        return n % 2 != 0;
    case SplitPolicy::CutLeft:
    case SplitPolicy::CutRight:
        return n >= 1;
    case SplitPolicy::LeftPlus:
    case SplitPolicy::RightPlus:
        return false;
    }
    return false;
}

Partition assemble(const Bounds& bounds, SplitPolicy policy) {
    Partition p;
    p.policy = policy;
    p.left = make_range(inclusive(narrow(bounds.left_lo)), exclusive(narrow(bounds.left_hi)));
    p.right = make_range(inclusive(narrow(bounds.right_lo)), exclusive(narrow(bounds.right_hi)));
    if (bounds.excluded)
        p.excluded = narrow(*bounds.excluded);
    return p;
}

std::optional<Wide> when(bool present, Wide value) {
    return present ? std::optional<Wide>(value) : std::nullopt;
}

} // namespace

std::string_view name(SplitPolicy policy) {
    switch (policy) {
    case SplitPolicy::Natural:
        return "natural";
    case SplitPolicy::LeftPlus:
        return "leftplus";
    case SplitPolicy::RightPlus:
        return "rightplus";
    case SplitPolicy::CutLeft:
        return "cutleft";
    case SplitPolicy::CutRight:
        return "cutright";
    }
    return "?";
}

std::optional<SplitPolicy> parse_policy(std::string_view text) {
    for (SplitPolicy p : all_policies)
        if (name(p) == text)
            return p;
    return std::nullopt;
}

bool equivalent(const Partition& a, const Partition& b) {
    return a.policy == b.policy && a.excluded == b.excluded && same_elements(a.left, b.left) &&
           same_elements(a.right, b.right);
}

Partition rebase(const Partition& p, Index b) {
    Partition out = p;
    out.left = rebase(p.left, b);
    out.right = rebase(p.right, b);
    if (p.excluded)
        out.excluded = checked_add(*p.excluded, b);
    return out;
}

std::string to_string(const Partition& p) {
    std::string s(name(p.policy));
    s += ": left " + to_string(p.left) + ", excluded ";
    s += p.excluded ? std::to_string(*p.excluded) : std::string("none");
    s += ", right " + to_string(p.right);
    return s;
}

std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << to_string(p); }

Partition split_n(Extent extent, SplitPolicy policy) {
    const Wide n = extent.value();
    const Wide half = n / 2;
    const Wide up = (n + 1) / 2;
    const bool cut = excludes_element(policy, n);
    switch (policy) {
    case SplitPolicy::Natural:
        return assemble({0, half, when(cut, half), up, n}, policy);
    case SplitPolicy::LeftPlus:
        return assemble({0, up, {}, up, n}, policy);
    case SplitPolicy::RightPlus:
        return assemble({0, half, {}, half, n}, policy);
    case SplitPolicy::CutLeft:
        return assemble({0, up - 1, when(cut, up - 1), up, n}, policy);
    case SplitPolicy::CutRight:
        return assemble({0, half, when(cut, half), half + 1, n}, policy);
    }
    throw DomainError("unknown split policy");
}

Partition split_based(Index base, Extent extent, SplitPolicy policy) {
    const Wide b = base;
    const Wide n = extent.value();
    const bool cut = excludes_element(policy, n);
    switch (policy) {
    case SplitPolicy::Natural:
        return assemble({b, b + n / 2, when(cut, b + n / 2), b + (n + 1) / 2, b + n}, policy);
    case SplitPolicy::LeftPlus:
        return assemble({b, b + (n + 1) / 2, {}, b + (n + 1) / 2, b + n}, policy);
    case SplitPolicy::RightPlus:
        return assemble({b, b + n / 2, {}, b + n / 2, b + n}, policy);
    case SplitPolicy::CutLeft:
        return assemble(
            {b, b + (n + 1) / 2 - 1, when(cut, b + (n + 1) / 2 - 1), b + (n + 1) / 2, b + n},
            policy);
    case SplitPolicy::CutRight:
        return assemble({b, b + n / 2, when(cut, b + n / 2), b + n / 2 + 1, b + n}, policy);
    }
    throw DomainError("unknown split policy");
}

Partition split_be(Index first, Index last, SplitPolicy policy) {
    if (last < first)
        throw DomainError("split_be needs e >= b, got b=" + std::to_string(first) +
                          " e=" + std::to_string(last));
    const Wide b = first;
    const Wide e = last;
    const Wide m = b + e;
    // m may be negative, so every halving here must round down.
    const Wide down = floor_div<Wide>(m, 2);
    const Wide up = floor_div<Wide>(m + 1, 2);
    const bool cut = excludes_element(policy, e - b + 1);
    switch (policy) {
    case SplitPolicy::Natural:
        return assemble({b, up, when(cut, down), down + 1, e + 1}, policy);
    case SplitPolicy::LeftPlus:
        return assemble({b, down + 1, {}, down + 1, e + 1}, policy);
    case SplitPolicy::RightPlus:
        return assemble({b, up, {}, up, e + 1}, policy);
    case SplitPolicy::CutLeft:
        return assemble({b, down, when(cut, down), down + 1, e + 1}, policy);
    case SplitPolicy::CutRight:
        return assemble({b, up, when(cut, up), up + 1, e + 1}, policy);
    }
    throw DomainError("unknown split policy");
}

bool supports_bex(SplitPolicy policy) {
    return policy == SplitPolicy::Natural || policy == SplitPolicy::RightPlus ||
           policy == SplitPolicy::CutRight;
}

Partition split_bex(Index first, Index past_end, SplitPolicy policy) {
    if (past_end < first)
        throw DomainError("split_bex needs ex >= b, got b=" + std::to_string(first) +
                          " ex=" + std::to_string(past_end));
    const Wide b = first;
    const Wide ex = past_end;
    const bool cut = excludes_element(policy, ex - b);
    switch (policy) {
    case SplitPolicy::Natural: {
        const Wide mid = floor_div<Wide>(b + ex, 2);
        return assemble({b, mid, when(cut, mid), floor_div<Wide>(b + ex - 1, 2) + 1, ex}, policy);
    }
    case SplitPolicy::RightPlus: {
        const Wide mid = floor_div<Wide>(b + ex, 2);
        return assemble({b, mid, {}, mid, ex}, policy);
    }
    case SplitPolicy::CutRight: {
        const Wide mid = b + (ex - b) / 2;
        return assemble({b, mid, when(cut, mid), mid + 1, ex}, policy);
    }
    case SplitPolicy::LeftPlus:
    case SplitPolicy::CutLeft:
        break;
    }
    throw DomainError("no b/ex formulation for policy " + std::string(name(policy)));
}

Landmarks landmarks(Extent extent) {
    const Index n = extent.value();
    if (n < 2)
        throw DomainError("landmarks need n >= 2, got " + std::to_string(n));
    Landmarks l;
    l.el = n / 2 - 1;
    l.rs = narrow((Wide(n) + 1) / 2);
    if (n % 2 != 0)
        l.center = n / 2;
    return l;
}

Range center_band(Extent extent) {
    const Wide n = extent.value();
    return Range(narrow(n / 2), narrow((n + 1) / 2));
}

std::optional<Index> center_index(Extent n) {
    const Range band = center_band(n);
    if (band.empty())
        return std::nullopt;
    return band.lo();
}

Range center_window(Extent extent, Extent side) {
    const Wide n = extent.value();
    const Wide k = side.value();
    const Wide lo = n / 2 - k;
    const Wide hi = (n + 1) / 2 + k;
    if (lo < 0 || hi > n)
        throw DomainError("center window of " + std::to_string(side.value()) +
                          " per side does not fit in n=" + std::to_string(extent.value()));
    return Range(narrow(lo), narrow(hi));
}

std::vector<Range> kway_split(Extent extent, Extent parts) {
    const Index k = parts.value();
    if (k == 0)
        throw DomainError("kway_split needs k >= 1");
    const Wide n = extent.value();
    std::vector<Range> out;
    out.reserve(static_cast<std::size_t>(k));
    Index lo = 0;
    for (Index r = 0; r < k; ++r) {
        const Index hi = narrow(lo + (n + r) / k);
        out.emplace_back(lo, hi);
        lo = hi;
    }
    return out;
}

} // namespace idxsplit
