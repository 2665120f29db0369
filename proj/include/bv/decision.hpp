#pragma once

#include <cstddef>
#include <string>

namespace bv {

/// Answer to a semi-decidable question about an infinite diagram.
/// Unknown carries the depth that was actually examined.
class Decision {
public:
    enum class Kind { Yes, No, Unknown };

    static Decision yes() { return Decision(Kind::Yes, 0); }
    static Decision no() { return Decision(Kind::No, 0); }
    static Decision unknown(std::size_t explored_depth) {
        return Decision(Kind::Unknown, explored_depth);
    }

    Kind kind() const noexcept { return kind_; }
    bool is_yes() const noexcept { return kind_ == Kind::Yes; }
    bool is_no() const noexcept { return kind_ == Kind::No; }
    bool is_unknown() const noexcept { return kind_ == Kind::Unknown; }
    std::size_t explored_depth() const noexcept { return depth_; }

    /// "yes", "no" or "unknown@<depth>".
    std::string to_string() const;

    friend bool operator==(const Decision&, const Decision&) = default;

private:
    Decision(Kind kind, std::size_t depth) : kind_(kind), depth_(depth) {}

    Kind kind_;
    std::size_t depth_;
};

}  // namespace bv
