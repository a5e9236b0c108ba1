#pragma once

#include <cstdint>

namespace zxdd {

/// Spider phase as a multiple of pi/4, stored as the canonical residue mod 8.
class Phase {
public:
    constexpr Phase() = default;
    constexpr explicit Phase(int64_t quarter_turns) : k_(norm(quarter_turns)) {}

    [[nodiscard]] constexpr uint8_t k() const { return k_; }

    [[nodiscard]] constexpr bool is_zero() const { return k_ == 0; }
    [[nodiscard]] constexpr bool is_pauli() const { return k_ == 0 || k_ == 4; }
    [[nodiscard]] constexpr bool is_clifford() const { return (k_ & 1) == 0; }
    [[nodiscard]] constexpr bool is_proper_clifford() const { return k_ == 2 || k_ == 6; }
    [[nodiscard]] constexpr bool is_t_like() const { return (k_ & 1) == 1; }

    constexpr Phase& operator+=(Phase o) {
        k_ = norm(k_ + o.k_);
        return *this;
    }
    friend constexpr Phase operator+(Phase a, Phase b) { return Phase(a.k_ + b.k_); }
    friend constexpr Phase operator-(Phase a) { return Phase(-int64_t(a.k_)); }
    friend constexpr Phase operator-(Phase a, Phase b) { return Phase(int64_t(a.k_) - b.k_); }
    friend constexpr bool operator==(Phase a, Phase b) { return a.k_ == b.k_; }
    friend constexpr bool operator!=(Phase a, Phase b) { return a.k_ != b.k_; }

private:
    static constexpr uint8_t norm(int64_t k) { return static_cast<uint8_t>(((k % 8) + 8) % 8); }
    uint8_t k_ = 0;
};

} // namespace zxdd
