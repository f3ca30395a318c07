#ifndef ELLIPTOPE_ERROR_HPP
#define ELLIPTOPE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace ell {

// Stable error codes; the C API returns these as ints.
enum class ErrorCode : int {
  ok = 0,
  index_out_of_range = 1,
  duplicate_edge = 2,
  self_loop = 3,
  not_unweighted = 4,
  zero_multiplicity = 5,
  empty_part_list = 6,
  nonpositive_mass = 7,
  bad_size = 8,
  too_large = 9,
  size_mismatch = 10,
  not_symmetric_backing = 11,
  no_convergence = 12,
  bad_block_sizes = 13,
  mixed_backings = 14,
  dimension_mismatch = 15,
  not_complementary = 16,
  unequal_sizes = 17,
  degree_bound_violated = 18,
  sizes_not_strict = 19,
  witness_invalid = 20,
  odd_order = 21,
  dominating = 22,
  too_small = 23,
  spec_mismatch = 24,
  infeasible_input = 25,
  pair_not_optimal = 26,
  not_rank_one = 27,
  unsorted = 28,
  degenerate_instance = 29,
  parse_error = 30,
  io_error = 31,
  usage_error = 32,
  internal_error = 33,
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace ell

#endif
