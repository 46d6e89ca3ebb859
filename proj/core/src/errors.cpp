#include "homtopo/errors.hpp"

namespace homtopo {

ResourceError::ResourceError(const std::string& what, std::size_t progress)
    : std::runtime_error(what), progress_(progress) {}

}  // namespace homtopo
