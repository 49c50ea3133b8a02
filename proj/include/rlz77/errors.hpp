/*
 * errors.hpp
 *
 *  Exception types shared by the rlz77 structures.
 *
 *  Index errors use std::out_of_range directly. The types below cover the
 *  remaining failure classes: a caller breaking an operation's precondition,
 *  a structure detecting that its own invariants no longer hold, and a
 *  factor stream that cannot be decoded.
 */

#ifndef RLZ77_ERRORS_HPP_
#define RLZ77_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace rlz77 {

class contract_violation : public std::logic_error {
public:
	explicit contract_violation(const std::string& what) : std::logic_error(what) {}
};

class corruption_error : public std::runtime_error {
public:
	explicit corruption_error(const std::string& what) : std::runtime_error(what) {}
};

class malformed_input : public std::runtime_error {
public:
	explicit malformed_input(const std::string& what) : std::runtime_error(what) {}
};

} // namespace rlz77

#endif /* RLZ77_ERRORS_HPP_ */
