#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qst {

// Outcome of one verification. `anchor` states the identity being checked in
// plain words; a check without an anchor is refused by the report printer.
// status is "pass", "fail" or "inconclusive" (the latter only when the
// requested window is too shallow to decide).
struct CheckReport {
    std::string check_id;
    std::string anchor;
    std::string status;
    std::string detail;
    double wall_ms = 0;

    bool passed() const { return status == "pass"; }
};

// The individual verification suites. Each takes the list of primes to
// sweep; the spec sweep is used when the list is what the corresponding
// default function returns.
CheckReport check_classical_closed_form(const std::vector<int64_t>& primes);
CheckReport check_char0_printed();
CheckReport check_flatness(const std::vector<int64_t>& primes);
CheckReport check_dual_path(const std::vector<int64_t>& primes);
CheckReport check_periodicity(const std::vector<int64_t>& primes);
CheckReport check_h_closed_forms(const std::vector<int64_t>& primes);
CheckReport check_annihilation_sweep(const std::vector<int64_t>& primes);
CheckReport check_flat_section_equations(const std::vector<int64_t>& primes);
CheckReport check_rank2(const std::vector<int64_t>& primes, uint64_t seed);
CheckReport check_multiple_cover();
CheckReport check_property_suites(const std::vector<int64_t>& primes,
                                  uint64_t seed);

// All eleven checks in order. An empty prime list runs each check on its
// default sweep; a nonempty list restricts every prime-parametrized check
// to those primes.
std::vector<CheckReport> acceptance_suite(const std::vector<int64_t>& primes,
                                          uint64_t seed);

} // namespace qst
