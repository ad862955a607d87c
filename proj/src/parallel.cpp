#include "pdslab/parallel.hpp"

#include <cstdlib>
#include <string>

namespace pdslab {

int default_thread_count() {
    if (const char* env = std::getenv("PDSLAB_THREADS")) {
        try {
            const int n = std::stoi(env);
            if (n >= 1) return n;
        } catch (...) {
            // fall through to hardware default
        }
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

} // namespace pdslab
