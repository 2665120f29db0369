#include "bv/decision.hpp"

namespace bv {

std::string Decision::to_string() const {
    switch (kind_) {
        case Kind::Yes: return "yes";
        case Kind::No: return "no";
        case Kind::Unknown: return "unknown@" + std::to_string(depth_);
    }
    return "unknown";
}

}  // namespace bv
