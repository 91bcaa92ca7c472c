#pragma once

#include <array>
#include <cmath>
#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>

namespace mbsb {

inline constexpr double inf = std::numeric_limits<double>::infinity();

struct Point3 {
    double x = 0, y = 0, z = 0;

    double operator[](int axis) const { return axis == 0 ? x : axis == 1 ? y : z; }
    double& operator[](int axis) { return axis == 0 ? x : axis == 1 ? y : z; }

    bool finite() const { return std::isfinite(x) && std::isfinite(y) && std::isfinite(z); }

    friend bool operator==(const Point3&, const Point3&) = default;
    friend auto operator<=>(const Point3& a, const Point3& b) {
        if (auto c = a.x <=> b.x; c != 0) return c;
        if (auto c = a.y <=> b.y; c != 0) return c;
        return a.z <=> b.z;
    }
    friend std::ostream& operator<<(std::ostream& os, const Point3& p) {
        return os << "(" << p.x << ", " << p.y << ", " << p.z << ")";
    }
};

/// The six axis directions. Convention: right = +X, front = +Y, top = +Z.
enum class Direction : int {
    left = 0,    // -X
    right = 1,   // +X
    back = 2,    // -Y
    front = 3,   // +Y
    bottom = 4,  // -Z
    top = 5,     // +Z
};

inline constexpr std::array<Direction, 6> all_directions = {
    Direction::left,  Direction::right,  Direction::back,
    Direction::front, Direction::bottom, Direction::top,
};

constexpr int axis_of(Direction d) { return static_cast<int>(d) / 2; }
constexpr bool is_positive(Direction d) { return static_cast<int>(d) % 2 == 1; }
constexpr int sign_of(Direction d) { return is_positive(d) ? +1 : -1; }
constexpr Direction opposite(Direction d) { return static_cast<Direction>(static_cast<int>(d) ^ 1); }
constexpr Direction direction_of(int axis, int sign) {
    return static_cast<Direction>(axis * 2 + (sign > 0 ? 1 : 0));
}

const char* direction_name(Direction d);

/// Axis-aligned box with extended-real bounds; lo[a] <= hi[a] on every axis.
/// Infinite bounds model directions never blocked by a blue point.
struct Box3 {
    std::array<double, 3> lo{0, 0, 0};
    std::array<double, 3> hi{0, 0, 0};

    static Box3 everything() { return Box3{{-inf, -inf, -inf}, {inf, inf, inf}}; }
    static Box3 from_point(const Point3& p) { return Box3{{p.x, p.y, p.z}, {p.x, p.y, p.z}}; }

    bool valid() const {
        for (int a = 0; a < 3; ++a) {
            if (!(lo[a] <= hi[a])) return false;
            if (std::isnan(lo[a]) || std::isnan(hi[a])) return false;
        }
        return true;
    }

    double extent(int axis) const { return hi[axis] - lo[axis]; }

    /// Bound of the face in direction d: hi for positive directions, lo for negative.
    double bound(Direction d) const { return is_positive(d) ? hi[axis_of(d)] : lo[axis_of(d)]; }
    void set_bound(Direction d, double v) {
        if (is_positive(d)) hi[axis_of(d)] = v; else lo[axis_of(d)] = v;
    }

    bool contains_box(const Box3& inner) const {
        for (int a = 0; a < 3; ++a)
            if (inner.lo[a] < lo[a] || inner.hi[a] > hi[a]) return false;
        return true;
    }

    friend bool operator==(const Box3&, const Box3&) = default;
    friend std::ostream& operator<<(std::ostream& os, const Box3& b);
};

/// Product of extents; +inf wins over a zero extent (an unbounded box has
/// infinite volume even if degenerate on another axis).
double volume(const Box3& b);

/// lo[a] <= p[a] <= hi[a] on all axes.
bool contains_closed(const Box3& b, const Point3& p);

/// lo[a] < p[a] < hi[a] on all axes.
bool contains_open(const Box3& b, const Point3& p);

/// Lexicographic order on (lo, hi); the deterministic tie-break for co-optimal boxes.
bool lex_less(const Box3& a, const Box3& b);

}  // namespace mbsb
