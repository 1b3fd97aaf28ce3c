#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "idxsplit/algorithms.hpp"
#include "idxsplit/split.hpp"

// Brute-force definitions that share no formula with the splitter and the
// algorithms, plus the sweeps that hold those modules against them.
namespace idxsplit::oracle {

// Halves built by walking two cursors toward each other: no division
// anywhere. Cut policies without a center drop el (left) or rs (right).
Partition oracle_split(Extent n, SplitPolicy policy);

struct Failure {
    std::string what;
    std::string expected;
    std::string actual;
};

class VerificationReport {
public:
    static constexpr std::size_t max_failures = 100;

    explicit VerificationReport(std::string name = {}) : name_(std::move(name)) {}

    const std::string& name() const { return name_; }
    std::uint64_t checked() const { return checked_; }
    std::uint64_t failed() const { return failed_; }
    // At most max_failures entries; failed() is the exact count.
    const std::vector<Failure>& failures() const { return failures_; }
    std::chrono::nanoseconds elapsed() const { return elapsed_; }
    bool passed() const { return failed_ == 0; }
    // Free-form facts worth printing with the result, e.g. the seed.
    const std::string& note() const { return note_; }

    void pass(std::uint64_t count = 1) { checked_ += count; }
    void fail(Failure f);
    // pass() when ok, else fail() with the lazily built failure.
    template <typename F>
    void check(bool ok, F&& describe) {
        if (ok)
            pass();
        else
            fail(describe());
    }
    void set_elapsed(std::chrono::nanoseconds d) { elapsed_ = d; }
    void set_note(std::string note) { note_ = std::move(note); }

    // Associative; elapsed times add.
    void merge(const VerificationReport& other);

private:
    std::string name_;
    std::string note_;
    std::uint64_t checked_ = 0;
    std::uint64_t failed_ = 0;
    std::vector<Failure> failures_;
    std::chrono::nanoseconds elapsed_{0};
};

using SplitFn = std::function<Partition(Extent, SplitPolicy)>;

// For every n in [0, max_n] and policy: split(n) equals oracle_split(n)
// (halves compared as sets), the pieces tile [0, n) exactly, the size laws
// hold, and cut policies drop the expected landmark. jobs > 1 sweeps
// disjoint n-chunks on separate threads.
VerificationReport verify_partitions(Extent max_n, std::span<const SplitPolicy> policies,
                                     const SplitFn& split = split_n, unsigned jobs = 1);

// n in [1, max_n]: Left+ minus its first element is Right+ of the shorter
// frame, Right+ minus its last element is Left+ of the shorter frame, and
// the cut policies are Right+/Left+ with one element shaved off.
VerificationReport verify_duality(Extent max_n);

// n in [0, max_n]: mirroring maps the Natural left half onto the Natural
// right half, and Left+ halves onto Right+ halves.
VerificationReport verify_mirror(Extent max_n);

// split_n, split_based, split_be and split_bex agree after rebasing for every
// b in b_domain and n in n_domain (n >= 1).
VerificationReport verify_coordinates(Range b_domain, Range n_domain);

// kway_split parts tile [0, n), are non-decreasing and differ by at most one.
VerificationReport verify_kway(Extent max_n, Extent max_k);

// First index holding t.
std::optional<Index> linear_search(std::span<const Value> a, Value t);

// Every non-decreasing sequence of length 0..max_n over [0, alphabet),
// shortest first, lexicographic within a length.
void for_each_sorted_array(Extent max_n, Extent alphabet,
                           const std::function<void(std::span<const Value>)>& visit);
std::vector<std::vector<Value>> sorted_arrays(Extent max_n, Extent alphabet);

// Every sequence of length 0..max_n over [0, alphabet).
void for_each_array(Extent max_n, Extent alphabet,
                    const std::function<void(std::span<const Value>)>& visit);

// Literal reading of "a word crosses the center": some maximal non-space
// run has a character in the left half, one in the right half, and (odd n)
// one at the center.
bool brute_word_cross(std::string_view text);

struct SearchSuite {
    Extent max_len{10};
    Extent alphabet{3};
    std::size_t random_cases = 10000;
    Extent random_max_len{64};
    std::uint64_t seed = 1;
};

// All variants against linear_search on every sorted array of the suite,
// through an accessor that records out-of-bounds reads, and with the
// frame-length termination metric checked at each iteration.
VerificationReport verify_search(const SearchSuite& suite);

struct SortSuite {
    Extent max_len{8};
    Extent alphabet{3};
    std::size_t random_cases = 10000;
    Extent random_max_len{256};
    std::uint64_t seed = 1;
};

VerificationReport verify_sort(const SortSuite& suite);

// word_crosses_center against brute_word_cross on all strings over
// {'a', ' '} of length 0..max_len.
VerificationReport verify_word_cross(Extent max_len);

} // namespace idxsplit::oracle
