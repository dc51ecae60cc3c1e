#include "satlab/parallel.hpp"

#include <cstdlib>
#include <string>
#include <thread>

namespace satlab {

int resolve_worker_count(int requested)
{
    int workers = requested > 0 ? requested : static_cast<int>(std::thread::hardware_concurrency());
    if (workers < 1)
        workers = 1;
    if (const char* env = std::getenv("SATLAB_THREADS")) {
        try {
            int cap = std::stoi(env);
            if (cap >= 1 && cap < workers)
                workers = cap;
        } catch (const std::exception&) {
            // ignore unparsable values
        }
    }
    return workers;
}

} // namespace satlab
