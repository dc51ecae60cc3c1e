#pragma once

namespace satlab {

/// Worker count for data-parallel loops: `requested` if positive, otherwise
/// the hardware concurrency; the SATLAB_THREADS environment variable caps the
/// result either way. Always at least 1.
int resolve_worker_count(int requested);

} // namespace satlab
