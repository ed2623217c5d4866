#include "hopf2x/kernels.hpp"

namespace hopf2x::kernels {

namespace {
std::atomic<Exec> g_exec{Exec::parallel};
}

Exec default_exec() { return g_exec.load(); }
void set_default_exec(Exec e) { g_exec.store(e); }

}  // namespace hopf2x::kernels
