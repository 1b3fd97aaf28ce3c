#include "idxsplit/range.hpp"

#include <algorithm>
#include <ostream>

namespace idxsplit {

Extent length(Range r) { return r.length(); }

bool contains(Range r, Index i) { return r.lo() <= i && i < r.hi(); }

bool same_elements(Range a, Range b) {
    if (a.empty() || b.empty())
        return a.empty() && b.empty();
    return a == b;
}

Range make_range(BoundSpec lo, BoundSpec hi) {
    // < on the left and <= on the right each shift a bound by one; the
    // half-open form is the one with no adjustment.
    const Wide first = lo.inclusive ? Wide(lo.value) : Wide(lo.value) + 1;
    const Wide last = hi.inclusive ? Wide(hi.value) + 1 : Wide(hi.value);
    const Index l = narrow(first, "range lower bound");
    if (last < first)
        return Range(l, l);
    return Range(l, narrow(last, "range upper bound"));
}

Range drop_front(Range r, Extent g) {
    if (g > r.length())
        throw RangeUnderflowError("cannot drop " + std::to_string(g.value()) + " from " +
                                  to_string(r));
    return Range(r.lo() + g.value(), r.hi());
}

Range drop_back(Range r, Extent h) {
    if (h > r.length())
        throw RangeUnderflowError("cannot drop " + std::to_string(h.value()) + " from " +
                                  to_string(r));
    return Range(r.lo(), r.hi() - h.value());
}

Range left_window(Index p, Extent k, Pivot pivot) {
    const Wide end = pivot == Pivot::Include ? Wide(p) + 1 : Wide(p);
    return Range(narrow(end - k.value(), "window start"), narrow(end, "window end"));
}

Range right_window(Index p, Extent k, Pivot pivot) {
    const Wide start = pivot == Pivot::Include ? Wide(p) : Wide(p) + 1;
    return Range(narrow(start, "window start"), narrow(start + k.value(), "window end"));
}

Range rebase(Range r, Index b) {
    return Range(checked_add(r.lo(), b), checked_add(r.hi(), b));
}

Range intersect(Range a, Range b) {
    const Index lo = std::max(a.lo(), b.lo());
    const Index hi = std::min(a.hi(), b.hi());
    return hi < lo ? Range(lo, lo) : Range(lo, hi);
}

Index mirror_index(Index i, Extent n) {
    if (i < 0 || i >= n.value())
        throw DomainError("index " + std::to_string(i) + " outside [0, " +
                          std::to_string(n.value()) + ")");
    return n.value() - 1 - i;
}

Range mirror(Range r, Extent n) {
    if (r.lo() < 0 || r.hi() > n.value())
        throw DomainError(to_string(r) + " not within [0, " + std::to_string(n.value()) + ")");
    return Range(n.value() - r.hi(), n.value() - r.lo());
}

std::string to_string(Range r) {
    return "[" + std::to_string(r.lo()) + ", " + std::to_string(r.hi()) + ")";
}

std::ostream& operator<<(std::ostream& os, Range r) { return os << to_string(r); }

std::ostream& operator<<(std::ostream& os, Extent n) { return os << n.value(); }

} // namespace idxsplit
