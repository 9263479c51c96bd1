#ifndef NDG_ERROR_HPP
#define NDG_ERROR_HPP

#include <stdexcept>
#include <string>

namespace ndg {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace ndg

#endif
