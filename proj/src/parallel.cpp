#include "groth/parallel.hpp"

#include <cstdlib>
#include <string>
#include <thread>

namespace groth {

int worker_count() {
    if (const char* env = std::getenv("HECKE_WORKERS")) {
        int n = std::atoi(env);
        if (n >= 1) return n;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

int resolve_workers(int requested) { return requested >= 1 ? requested : worker_count(); }

}  // namespace groth
