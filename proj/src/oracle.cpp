#include "idxsplit/oracle.hpp"

#include <algorithm>
#include <future>
#include <random>

namespace idxsplit::oracle {
namespace {

using Clock = std::chrono::steady_clock;

// The three sections of [0, n) found by walking inward from both ends.
struct Sections {
    Index left_end = 0;             // left half is [0, left_end)
    std::optional<Index> center;    // odd n only
    Index right_start = 0;          // right half is [right_start, n)
    Index n = 0;
};

Sections walk(Index n) {
    Index lo = 0;
    Index hi = n;
    while (hi - lo >= 2) {
        ++lo;
        --hi;
    }
    Sections s;
    s.n = n;
    s.left_end = lo;
    s.right_start = hi;
    if (hi - lo == 1)
        s.center = lo;
    return s;
}

Partition from_sections(const Sections& s, SplitPolicy policy) {
    Partition p;
    p.policy = policy;
    const Index n = s.n;
    const Range left(0, s.left_end);
    const Range right(s.right_start, n);
    switch (policy) {
    case SplitPolicy::Natural:
        p.left = left;
        p.right = right;
        p.excluded = s.center;
        break;
    case SplitPolicy::LeftPlus:
        p.left = s.center ? Range(0, *s.center + 1) : left;
        p.right = right;
        break;
    case SplitPolicy::RightPlus:
        p.left = left;
        p.right = s.center ? Range(*s.center, n) : right;
        break;
    case SplitPolicy::CutLeft:
        if (s.center) {
            p.left = left;
            p.excluded = s.center;
            p.right = right;
        } else if (n > 0) {
            const Index el = s.left_end - 1;
            p.left = Range(0, el);
            p.excluded = el;
            p.right = right;
        }
        break;
    case SplitPolicy::CutRight:
        if (s.center) {
            p.left = left;
            p.excluded = s.center;
            p.right = right;
        } else if (n > 0) {
            const Index rs = s.right_start;
            p.left = left;
            p.excluded = rs;
            p.right = Range(rs + 1, n);
        }
        break;
    }
    return p;
}

std::string describe(Index n, SplitPolicy policy, const char* what) {
    return "n=" + std::to_string(n) + " " + std::string(name(policy)) + ": " + what;
}

// Non-empty pieces must chain 0 -> n without gaps or overlap.
bool tiles_frame(const Partition& p, Index n) {
    std::vector<Range> pieces;
    if (!p.left.empty())
        pieces.push_back(p.left);
    if (p.excluded)
        pieces.emplace_back(*p.excluded, *p.excluded + 1);
    if (!p.right.empty())
        pieces.push_back(p.right);
    std::sort(pieces.begin(), pieces.end(),
              [](Range a, Range b) { return a.lo() < b.lo(); });
    Index cursor = 0;
    for (Range r : pieces) {
        if (r.lo() != cursor)
            return false;
        cursor = r.hi();
    }
    return cursor == n;
}

std::string sizes(const Partition& p) {
    return "|left|=" + std::to_string(p.left.length().value()) +
           " |right|=" + std::to_string(p.right.length().value());
}

void check_partition(VerificationReport& report, const Partition& got, const Partition& want,
                     Index n, SplitPolicy policy) {
    report.check(got.policy == policy, [&] {
        return Failure{describe(n, policy, "policy label"), std::string(name(policy)),
                       std::string(name(got.policy))};
    });
    report.check(equivalent(got, want), [&] {
        return Failure{describe(n, policy, "formula vs oracle"), to_string(want), to_string(got)};
    });
    report.check(tiles_frame(got, n), [&] {
        return Failure{describe(n, policy, "pieces tile the frame"),
                       "[0, " + std::to_string(n) + ")", to_string(got)};
    });

    const Index l = got.left.length().value();
    const Index r = got.right.length().value();
    const Index half = n / 2;
    bool size_ok = true;
    std::string law;
    switch (policy) {
    case SplitPolicy::Natural:
        law = "|left|=|right|=" + std::to_string(half);
        size_ok = l == half && r == half;
        break;
    case SplitPolicy::LeftPlus:
        law = "|left|=" + std::to_string(n - half) + " |right|=" + std::to_string(half);
        size_ok = l == n - half && r == half;
        break;
    case SplitPolicy::RightPlus:
        law = "|left|=" + std::to_string(half) + " |right|=" + std::to_string(n - half);
        size_ok = l == half && r == n - half;
        break;
    case SplitPolicy::CutLeft:
    case SplitPolicy::CutRight:
        law = "|left|+|right|=" + std::to_string(n == 0 ? 0 : n - 1);
        size_ok = l + r == (n == 0 ? 0 : n - 1);
        break;
    }
    report.check(size_ok,
                 [&] { return Failure{describe(n, policy, "size law"), law, sizes(got)}; });

    if (policy == SplitPolicy::Natural || policy == SplitPolicy::LeftPlus ||
        policy == SplitPolicy::RightPlus) {
        report.check(std::abs(l - r) <= 1, [&] {
            return Failure{describe(n, policy, "imbalance"), "<= 1", sizes(got)};
        });
    }

    const bool expect_excluded = policy == SplitPolicy::Natural ? n % 2 != 0
                                 : (policy == SplitPolicy::CutLeft ||
                                    policy == SplitPolicy::CutRight)
                                     ? n >= 1
                                     : false;
    report.check(got.excluded.has_value() == expect_excluded, [&] {
        return Failure{describe(n, policy, "excluded presence"),
                       expect_excluded ? "present" : "absent",
                       got.excluded ? std::to_string(*got.excluded) : "absent"};
    });

    if (n >= 2 && (policy == SplitPolicy::CutLeft || policy == SplitPolicy::CutRight)) {
        const Landmarks lm = landmarks(Extent(n));
        const Index want_cut = lm.center ? *lm.center
                               : policy == SplitPolicy::CutLeft ? lm.el
                                                                : lm.rs;
        report.check(got.excluded == want_cut, [&] {
            return Failure{describe(n, policy, "cut landmark"), std::to_string(want_cut),
                           got.excluded ? std::to_string(*got.excluded) : "absent"};
        });
    }
}

VerificationReport sweep_partitions(Index first, Index last, std::span<const SplitPolicy> policies,
                                    const SplitFn& split) {
    VerificationReport report("partitions");
    for (Index n = first; n <= last; ++n) {
        const Sections s = walk(n);
        for (SplitPolicy policy : policies) {
            try {
                check_partition(report, split(Extent(n), policy), from_sections(s, policy), n,
                                policy);
            } catch (const Error& e) {
                report.fail({describe(n, policy, "split raised"), "a partition", e.what()});
            }
        }
    }
    return report;
}

template <typename F>
VerificationReport timed(F&& body) {
    const auto start = Clock::now();
    VerificationReport report = body();
    report.set_elapsed(Clock::now() - start);
    return report;
}

void sorted_rec(std::vector<Value>& cur, std::size_t pos, Value min_value, Index alphabet,
                const std::function<void(std::span<const Value>)>& visit) {
    if (pos == cur.size()) {
        visit(cur);
        return;
    }
    for (Value v = min_value; v < alphabet; ++v) {
        cur[pos] = v;
        sorted_rec(cur, pos + 1, v, alphabet, visit);
    }
}

std::string render(std::span<const Value> a) {
    std::string s = "[";
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(a[i]);
    }
    return s + "]";
}

std::string render(std::optional<Index> r) { return r ? std::to_string(*r) : "absent"; }

void check_one_search(VerificationReport& report, std::span<const Value> a, Value t) {
    const std::optional<Index> expected = linear_search(a, t);
    const Index size = static_cast<Index>(a.size());
    for (SearchVariant v : {SearchVariant::RightPlusSplit, SearchVariant::CutOutCenter,
                            SearchVariant::CutOutCompact}) {
        std::uint64_t out_of_bounds = 0;
        auto at = [&](Index i) -> Value {
            if (i < 0 || i >= size) {
                ++out_of_bounds;
                return 0;
            }
            return a[static_cast<std::size_t>(i)];
        };
        std::optional<Index> previous;
        bool shrinking = true;
        auto observe = [&](Range frame) {
            const Index len = frame.length().value();
            if (previous && len >= *previous)
                shrinking = false;
            previous = len;
        };
        const std::optional<Index> got = binary_search_by(at, Extent(size), t, v, observe);
        const std::string what =
            std::string(name(v)) + " search for " + std::to_string(t) + " in " + render(a);
        report.check(got.has_value() == expected.has_value() &&
                         (!got || (*got >= 0 && *got < size &&
                                   a[static_cast<std::size_t>(*got)] == t)),
                     [&] { return Failure{what, render(expected), render(got)}; });
        report.check(out_of_bounds == 0, [&] {
            return Failure{what + ": out-of-bounds reads", "0", std::to_string(out_of_bounds)};
        });
        report.check(shrinking, [&] {
            return Failure{what + ": frame length", "strictly decreasing", "stalled"};
        });
    }
}

void check_one_sort(VerificationReport& report, std::span<const Value> a) {
    std::vector<Value> expected(a.begin(), a.end());
    std::sort(expected.begin(), expected.end());
    const std::vector<Value> merged = merge_sort(a);
    report.check(merged == expected,
                 [&] { return Failure{"merge_sort " + render(a), render(expected), render(merged)}; });
    const std::vector<Value> quick = quicksort(a);
    report.check(quick == expected,
                 [&] { return Failure{"quicksort " + render(a), render(expected), render(quick)}; });
}

} // namespace

Partition oracle_split(Extent n, SplitPolicy policy) {
    return from_sections(walk(n.value()), policy);
}

void VerificationReport::fail(Failure f) {
    ++checked_;
    ++failed_;
    if (failures_.size() < max_failures)
        failures_.push_back(std::move(f));
}

void VerificationReport::merge(const VerificationReport& other) {
    checked_ += other.checked_;
    failed_ += other.failed_;
    for (const Failure& f : other.failures_) {
        if (failures_.size() >= max_failures)
            break;
        failures_.push_back(f);
    }
    elapsed_ += other.elapsed_;
    if (note_.empty())
        note_ = other.note_;
}

VerificationReport verify_partitions(Extent max_n, std::span<const SplitPolicy> policies,
                                     const SplitFn& split, unsigned jobs) {
    return timed([&] {
        const Index last = max_n.value();
        jobs = std::max(1u, jobs);
        if (jobs == 1)
            return sweep_partitions(0, last, policies, split);
        const Index total = last + 1;
        const Index chunk = (total + jobs - 1) / jobs;
        std::vector<std::future<VerificationReport>> parts;
        for (Index first = 0; first <= last; first += chunk) {
            const Index end = std::min(last, first + chunk - 1);
            parts.push_back(std::async(std::launch::async, [=, &split] {
                return sweep_partitions(first, end, policies, split);
            }));
        }
        VerificationReport report("partitions");
        for (auto& part : parts)
            report.merge(part.get());
        return report;
    });
}

VerificationReport verify_duality(Extent max_n) {
    return timed([&] {
        VerificationReport report("duality");
        for (Index n = 1; n <= max_n.value(); ++n) {
            const Extent frame(n);
            const Extent shorter(n - 1);
            const std::string at = "n=" + std::to_string(n);

            const Partition left_plus = split_n(frame, SplitPolicy::LeftPlus);
            Partition shaved = left_plus;
            shaved.left = drop_front(left_plus.left, Extent(1));
            shaved.policy = SplitPolicy::RightPlus;
            const Partition right_of_rest = rebase(split_n(shorter, SplitPolicy::RightPlus), 1);
            report.check(equivalent(shaved, right_of_rest), [&] {
                return Failure{at + ": leftplus minus first", to_string(right_of_rest),
                               to_string(shaved)};
            });

            const Partition right_plus = split_n(frame, SplitPolicy::RightPlus);
            shaved = right_plus;
            shaved.right = drop_back(right_plus.right, Extent(1));
            shaved.policy = SplitPolicy::LeftPlus;
            const Partition left_of_rest = split_n(shorter, SplitPolicy::LeftPlus);
            report.check(equivalent(shaved, left_of_rest), [&] {
                return Failure{at + ": rightplus minus last", to_string(left_of_rest),
                               to_string(shaved)};
            });

            // Cut-right is Right+ with the first element of the right half
            // removed; cut-left is Left+ with the last element of the left
            // half removed.
            Partition cut = right_plus;
            cut.excluded = right_plus.right.lo();
            cut.right = drop_front(right_plus.right, Extent(1));
            cut.policy = SplitPolicy::CutRight;
            const Partition cut_right = split_n(frame, SplitPolicy::CutRight);
            report.check(equivalent(cut, cut_right), [&] {
                return Failure{at + ": cutright from rightplus", to_string(cut_right),
                               to_string(cut)};
            });

            cut = left_plus;
            cut.excluded = left_plus.left.hi() - 1;
            cut.left = drop_back(left_plus.left, Extent(1));
            cut.policy = SplitPolicy::CutLeft;
            const Partition cut_left = split_n(frame, SplitPolicy::CutLeft);
            report.check(equivalent(cut, cut_left), [&] {
                return Failure{at + ": cutleft from leftplus", to_string(cut_left),
                               to_string(cut)};
            });
        }
        return report;
    });
}

VerificationReport verify_mirror(Extent max_n) {
    return timed([&] {
        VerificationReport report("mirror");
        for (Index n = 0; n <= max_n.value(); ++n) {
            const Extent frame(n);
            const std::string at = "n=" + std::to_string(n);
            const Partition natural = split_n(frame, SplitPolicy::Natural);
            const Range image = mirror(natural.left, frame);
            report.check(same_elements(image, natural.right), [&] {
                return Failure{at + ": mirror of natural left", to_string(natural.right),
                               to_string(image)};
            });
            const Partition left_plus = split_n(frame, SplitPolicy::LeftPlus);
            const Partition right_plus = split_n(frame, SplitPolicy::RightPlus);
            const Range plus_image = mirror(left_plus.left, frame);
            report.check(same_elements(plus_image, right_plus.right), [&] {
                return Failure{at + ": mirror of leftplus left", to_string(right_plus.right),
                               to_string(plus_image)};
            });
            if (natural.excluded) {
                const Index c = *natural.excluded;
                report.check(mirror_index(c, frame) == c, [&] {
                    return Failure{at + ": center is a fixed point", std::to_string(c),
                                   std::to_string(mirror_index(c, frame))};
                });
            }
        }
        return report;
    });
}

VerificationReport verify_coordinates(Range b_domain, Range n_domain) {
    if (!n_domain.empty() && n_domain.lo() < 1)
        throw DomainError("coordinate agreement needs n >= 1");
    return timed([&] {
        VerificationReport report("coordinates");
        for (Index b = b_domain.lo(); b < b_domain.hi(); ++b) {
            for (Index n = n_domain.lo(); n < n_domain.hi(); ++n) {
                for (SplitPolicy policy : all_policies) {
                    const std::string at = "b=" + std::to_string(b) + " n=" + std::to_string(n) +
                                           " " + std::string(name(policy));
                    const Partition want = rebase(split_n(Extent(n), policy), b);
                    const Partition based = split_based(b, Extent(n), policy);
                    report.check(based == want, [&] {
                        return Failure{at + ": split_based", to_string(want), to_string(based)};
                    });
                    const Partition be = split_be(b, b + n - 1, policy);
                    report.check(be == want, [&] {
                        return Failure{at + ": split_be", to_string(want), to_string(be)};
                    });
                    if (supports_bex(policy)) {
                        const Partition bex = split_bex(b, b + n, policy);
                        report.check(bex == want, [&] {
                            return Failure{at + ": split_bex", to_string(want), to_string(bex)};
                        });
                    }
                }
            }
        }
        return report;
    });
}

VerificationReport verify_kway(Extent max_n, Extent max_k) {
    return timed([&] {
        VerificationReport report("kway");
        for (Index k = 1; k <= max_k.value(); ++k) {
            for (Index n = 0; n <= max_n.value(); ++n) {
                const std::vector<Range> parts = kway_split(Extent(n), Extent(k));
                bool ok = static_cast<Index>(parts.size()) == k;
                Index cursor = 0;
                Index shortest = n;
                Index longest = 0;
                Index previous = 0;
                for (const Range& r : parts) {
                    const Index len = r.length().value();
                    ok = ok && r.lo() == cursor && len >= previous;
                    cursor = r.hi();
                    previous = len;
                    shortest = std::min(shortest, len);
                    longest = std::max(longest, len);
                }
                ok = ok && cursor == n && longest - shortest <= 1;
                report.check(ok, [&] {
                    return Failure{"kway n=" + std::to_string(n) + " k=" + std::to_string(k),
                                   "tiling of [0, n) with sizes differing by <= 1",
                                   "parts ending at " + std::to_string(cursor)};
                });
            }
        }
        return report;
    });
}

std::optional<Index> linear_search(std::span<const Value> a, Value t) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] == t)
            return static_cast<Index>(i);
    return std::nullopt;
}

void for_each_sorted_array(Extent max_n, Extent alphabet,
                           const std::function<void(std::span<const Value>)>& visit) {
    if (alphabet.value() < 1)
        throw DomainError("alphabet must have at least one symbol");
    for (Index len = 0; len <= max_n.value(); ++len) {
        std::vector<Value> cur(static_cast<std::size_t>(len));
        sorted_rec(cur, 0, 0, alphabet.value(), visit);
    }
}

std::vector<std::vector<Value>> sorted_arrays(Extent max_n, Extent alphabet) {
    std::vector<std::vector<Value>> out;
    for_each_sorted_array(max_n, alphabet,
                          [&](std::span<const Value> a) { out.emplace_back(a.begin(), a.end()); });
    return out;
}

void for_each_array(Extent max_n, Extent alphabet,
                    const std::function<void(std::span<const Value>)>& visit) {
    if (alphabet.value() < 1)
        throw DomainError("alphabet must have at least one symbol");
    for (Index len = 0; len <= max_n.value(); ++len) {
        std::vector<Value> cur(static_cast<std::size_t>(len), 0);
        while (true) {
            visit(cur);
            // Odometer increment; stop after wrapping every digit.
            std::size_t i = 0;
            while (i < cur.size() && ++cur[i] == alphabet.value())
                cur[i++] = 0;
            if (i == cur.size())
                break;
        }
    }
}

bool brute_word_cross(std::string_view text) {
    const Sections s = walk(static_cast<Index>(text.size()));
    const Index n = s.n;
    Index i = 0;
    while (i < n) {
        if (text[static_cast<std::size_t>(i)] == ' ') {
            ++i;
            continue;
        }
        const Index start = i;
        while (i < n && text[static_cast<std::size_t>(i)] != ' ')
            ++i;
        const Range word(start, i);
        const bool in_left = !intersect(word, Range(0, s.left_end)).empty();
        const bool in_right = !intersect(word, Range(s.right_start, n)).empty();
        const bool at_center = !s.center || contains(word, *s.center);
        if (in_left && in_right && at_center)
            return true;
    }
    return false;
}

VerificationReport verify_search(const SearchSuite& suite) {
    return timed([&] {
        VerificationReport report("search");
        report.set_note("seed=" + std::to_string(suite.seed));
        for_each_sorted_array(suite.max_len, suite.alphabet, [&](std::span<const Value> a) {
            for (Value t = -1; t <= suite.alphabet.value(); ++t)
                check_one_search(report, a, t);
        });

        std::mt19937_64 rng(suite.seed);
        std::uniform_int_distribution<Index> length(0, suite.random_max_len.value());
        for (std::size_t c = 0; c < suite.random_cases; ++c) {
            const Index len = length(rng);
            std::uniform_int_distribution<Value> value(0, len);
            std::vector<Value> a(static_cast<std::size_t>(len));
            for (Value& v : a)
                v = value(rng);
            std::sort(a.begin(), a.end());
            std::vector<Value> targets = {-1, len + 1, value(rng)};
            if (!a.empty()) {
                std::uniform_int_distribution<std::size_t> pick(0, a.size() - 1);
                targets.push_back(a[pick(rng)]);
            }
            for (Value t : targets)
                check_one_search(report, a, t);
        }
        return report;
    });
}

VerificationReport verify_sort(const SortSuite& suite) {
    return timed([&] {
        VerificationReport report("sort");
        report.set_note("seed=" + std::to_string(suite.seed));
        for_each_array(suite.max_len, suite.alphabet,
                       [&](std::span<const Value> a) { check_one_sort(report, a); });
        std::mt19937_64 rng(suite.seed);
        std::uniform_int_distribution<Index> length(0, suite.random_max_len.value());
        std::uniform_int_distribution<Value> value(-50, 50);
        for (std::size_t c = 0; c < suite.random_cases; ++c) {
            std::vector<Value> a(static_cast<std::size_t>(length(rng)));
            for (Value& v : a)
                v = value(rng);
            check_one_sort(report, a);
        }
        return report;
    });
}

VerificationReport verify_word_cross(Extent max_len) {
    return timed([&] {
        VerificationReport report("cross");
        for (Index len = 0; len <= max_len.value(); ++len) {
            const std::uint64_t count = std::uint64_t(1) << len;
            std::string text(static_cast<std::size_t>(len), ' ');
            for (std::uint64_t mask = 0; mask < count; ++mask) {
                for (Index i = 0; i < len; ++i)
                    text[static_cast<std::size_t>(i)] = (mask >> i) & 1 ? 'a' : ' ';
                const bool want = brute_word_cross(text);
                const bool got = word_crosses_center(text);
                report.check(want == got, [&] {
                    return Failure{"cross \"" + text + "\"", want ? "true" : "false",
                                   got ? "true" : "false"};
                });
            }
        }
        return report;
    });
}

} // namespace idxsplit::oracle
