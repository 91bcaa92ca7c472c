#include "mbsb/geom.hpp"

namespace mbsb {

const char* direction_name(Direction d) {
    switch (d) {
        case Direction::left: return "left";
        case Direction::right: return "right";
        case Direction::back: return "back";
        case Direction::front: return "front";
        case Direction::bottom: return "bottom";
        case Direction::top: return "top";
    }
    return "?";
}

double volume(const Box3& b) {
    for (int a = 0; a < 3; ++a)
        if (std::isinf(b.lo[a]) || std::isinf(b.hi[a])) return inf;
    return b.extent(0) * b.extent(1) * b.extent(2);
}

bool contains_closed(const Box3& b, const Point3& p) {
    for (int a = 0; a < 3; ++a)
        if (p[a] < b.lo[a] || p[a] > b.hi[a]) return false;
    return true;
}

bool contains_open(const Box3& b, const Point3& p) {
    for (int a = 0; a < 3; ++a)
        if (p[a] <= b.lo[a] || p[a] >= b.hi[a]) return false;
    return true;
}

bool lex_less(const Box3& a, const Box3& b) {
    for (int i = 0; i < 3; ++i) {
        if (a.lo[i] != b.lo[i]) return a.lo[i] < b.lo[i];
    }
    for (int i = 0; i < 3; ++i) {
        if (a.hi[i] != b.hi[i]) return a.hi[i] < b.hi[i];
    }
    return false;
}

std::ostream& operator<<(std::ostream& os, const Box3& b) {
    os << "[" << b.lo[0] << "," << b.hi[0] << "]x[" << b.lo[1] << "," << b.hi[1]
       << "]x[" << b.lo[2] << "," << b.hi[2] << "]";
    return os;
}

}  // namespace mbsb
