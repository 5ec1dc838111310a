#include "paley/parallel.hpp"

#include <cstdlib>
#include <string>

namespace paley {

unsigned resolve_workers(unsigned requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("PALEY_THREADS")) {
        try {
            const long parsed = std::stol(env);
            if (parsed > 0) return static_cast<unsigned>(parsed);
        } catch (const std::exception&) {
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

} // namespace paley
