#include "mct/solvers.hpp"

// The solver machinery is header-only (templated on the element type); this
// translation unit only anchors the header in the build.

namespace mct {}
