#ifndef SENTIPROFILE_ERROR_HPP_
#define SENTIPROFILE_ERROR_HPP_

#include <stdexcept>  // std::runtime_error
#include <string>     // std::string

namespace sentiprofile {

/// Raised for problems with input data: malformed files, unresolved labels,
/// knowledge-base integrity violations. Messages name the offending file/row.
class data_error : public std::runtime_error {
  public:
    explicit data_error(const std::string &msg) :
        std::runtime_error{ msg } { }
};

}  // namespace sentiprofile

#endif  // SENTIPROFILE_ERROR_HPP_
