#ifndef MBT_ERROR_HPP_
#define MBT_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace mbt {

  //! Malformed input: bad files, violated preconditions, inconsistent tables.
  class InputError : public std::runtime_error {
   public:
    explicit InputError(std::string const& what) : std::runtime_error(what) {}
  };

  //! An internal consistency check failed. Never expected on a correct build.
  class InvariantViolation : public std::logic_error {
   public:
    explicit InvariantViolation(std::string const& what)
        : std::logic_error(what) {}
  };

}  // namespace mbt

#endif  // MBT_ERROR_HPP_
