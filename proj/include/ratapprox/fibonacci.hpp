#pragma once

#include <vector>

#include "ratapprox/alpha.hpp"
#include "ratapprox/numeric.hpp"

namespace ratapprox {

/// terms[0] is the first element (value 1); the sequence continues with
/// terms[n+1] = [terms[n] * phi], certified through the quadratic oracle.
struct FibSequence {
  std::vector<Int> terms;
};

FibSequence fib_via_nearest(long n_max);

struct BinetReport {
  long n_max;
  std::vector<long> failures;  // n where [phi^n / sqrt(5)] != terms[n-1]
};

/// Certified nearest integer of phi^n / sqrt(5) (interval powering of the
/// phi enclosure, exact division by a sqrt(5) enclosure) compared against
/// the multiplicative-recurrence sequence.
BinetReport binet_round_check(long n_max);

}  // namespace ratapprox
