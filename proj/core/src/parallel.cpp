#include "rsavg/parallel.hpp"

namespace rsavg {

unsigned default_jobs()
{
    unsigned const n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : n;
}

}  // namespace rsavg
