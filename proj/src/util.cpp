#include "csf/util.hpp"

#include <cstdlib>
#include <thread>

namespace csf {

int worker_count(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("CSF_WORKERS")) {
        int w = std::atoi(env);
        if (w > 0) return w;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

}  // namespace csf
