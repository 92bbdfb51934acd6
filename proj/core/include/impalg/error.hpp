#ifndef IMPALG_ERROR_HPP
#define IMPALG_ERROR_HPP

#include <stdexcept>
#include <string>

namespace impalg {

// Error categories. The CLI maps these onto its exit codes; library users
// can switch on code() to distinguish bad inputs from internal failures.
enum class errc {
  parse,                 // malformed input text or unreadable file
  missing_table,         // operation needs a table the algebra lacks
  missing_constant,      // operation needs a designated constant
  precondition,          // an operation precondition does not hold
  not_constant,          // a -> a differs across the carrier
  law_violation,         // derived constant fails its defining laws
  not_definable,         // no term definition connects the signatures
  not_equivalence,       // h(1') is not an equivalence relation
  not_compatible,        // membership is not constant on h(1')-classes
  out_of_top,            // pair set not contained in the context top
  intransitive_context,  // composition requested over intransitive top
  non_weakening,         // relation fails the weakening condition
  caps_exceeded,         // hard resource caps of an oracle/search exceeded
  internal,              // invariant that must hold was violated: a bug
};

class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

}  // namespace impalg

#endif
