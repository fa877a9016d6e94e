#include "qschur/quat.hpp"

#include <ostream>

namespace qschur {

std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
  return os << "(" << q.w << ", " << q.x << ", " << q.y << ", " << q.z << ")";
}

}  // namespace qschur
