#pragma once

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <thread>

namespace qecc {

/// All library failures carry a stable machine-readable code next to the
/// human-readable message, so the CLI can render typed errors.
class Error : public std::runtime_error {
   public:
    Error(std::string code, const std::string& what) : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

   private:
    std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& what) { throw Error(code, what); }

inline void require(bool ok, const std::string& code, const std::string& what) {
    if (!ok) fail(code, what);
}

/// Worker count for exhaustive scans. QECC_WORKERS overrides; default 1.
inline unsigned worker_count() {
    static const unsigned w = [] {
        if (const char* env = std::getenv("QECC_WORKERS")) {
            long v = std::atol(env);
            unsigned hw = std::max(1u, std::thread::hardware_concurrency());
            if (v > 0) return static_cast<unsigned>(std::min<long>(v, hw));
        }
        return 1u;
    }();
    return w;
}

}  // namespace qecc
