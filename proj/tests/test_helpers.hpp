#pragma once

#include <memory>

#include "siltlab/dynkin.hpp"
#include "siltlab/modcat.hpp"
#include "siltlab/quiver.hpp"
#include "siltlab/rep.hpp"

namespace siltlab::testutil {

// A_2: 1 <- 2
inline std::shared_ptr<const Quiver> a2() {
    return std::make_shared<const Quiver>(2, std::vector<Arrow>{{2, 1}});
}

// A_3, linear orientation 1 <- 2 <- 3
inline std::shared_ptr<const Quiver> a3() {
    return std::make_shared<const Quiver>(3, std::vector<Arrow>{{2, 1}, {3, 2}});
}

// A_3 with alternating orientation 1 <- 2 -> 3
inline std::shared_ptr<const Quiver> a3_alt() {
    return std::make_shared<const Quiver>(3, std::vector<Arrow>{{2, 1}, {2, 3}});
}

// D_4, all arrows into the center vertex 1
inline std::shared_ptr<const Quiver> d4() {
    return std::make_shared<const Quiver>(4, std::vector<Arrow>{{2, 1}, {3, 1}, {4, 1}});
}

// the rank-3 quiver with arrows 2->1, 3->1, 3->2 (underlying triangle)
inline std::shared_ptr<const Quiver> triangle() {
    return std::make_shared<const Quiver>(3, std::vector<Arrow>{{2, 1}, {3, 1}, {3, 2}});
}

// a single vertex
inline std::shared_ptr<const Quiver> a1() {
    return std::make_shared<const Quiver>(1, std::vector<Arrow>{});
}

// two orthogonal vertices (disconnected A_1 x A_1)
inline std::shared_ptr<const Quiver> a1a1() {
    return std::make_shared<const Quiver>(2, std::vector<Arrow>{});
}

}  // namespace siltlab::testutil
