#include "cli.hpp"

#include "homx/error.hpp"

#include <csignal>
#include <cstdlib>
#include <iostream>

namespace {

std::atomic<bool> interrupted{false};

extern "C" void on_interrupt(int) { interrupted.store(true); }

}  // namespace

int main(int argc, char** argv) {
    std::signal(SIGINT, on_interrupt);
    unsigned jobs = 1;
    try {
        jobs = homx::cli::jobs_from_environment(std::getenv("HOMX_JOBS"));
    } catch (const homx::Error& e) {
        std::cerr << "homx: " << e.what() << '\n';
        return homx::cli::kExitUsage;
    }
    std::vector<std::string> args(argv + 1, argv + argc);
    return homx::cli::run(args, {std::cin, std::cout, std::cerr, jobs, &interrupted});
}
