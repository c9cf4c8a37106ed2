#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "padic/document.hpp"

namespace padic {

// Exit codes shared by the CLI surface:
//   0 ok, 1 verification failure, 2 infeasible tree, 3 bad input, 4 I/O or schema.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFail = 1;
inline constexpr int kExitInfeasible = 2;
inline constexpr int kExitBadInput = 3;
inline constexpr int kExitIo = 4;

struct BuildArgs {
    int p = 0;
    int N = 0;
    std::optional<std::string> tree_file;
    std::vector<std::string> transforms;  ///< "i:J" or "ii:L", applied in order
    std::vector<long> pad;                ///< explicit padding nodes (default rule otherwise)
    std::vector<int> j_low;               ///< n=1 branch: members of J_{1,-N}
    std::vector<std::string> e_cosets;    ///< general branch: "level:j^e,j^e" coset specs
    std::string out;
};

struct VerifyArgs {
    std::string in;
    int tests = 50;
    double tol = 1e-9;
    std::uint64_t seed = 0;
    std::optional<std::string> report_out;
};

struct RenderArgs {
    std::string in;
    std::string what = "phi-hat";     ///< phi-hat | phi-hat-shifted | wavelets
    std::string format = "ascii";     ///< ascii | svg
    std::optional<std::string> out;   ///< stdout when absent
};

int cmd_build(const BuildArgs& args, std::string& err);
int cmd_verify(const VerifyArgs& args, std::string& err);
int cmd_render(const RenderArgs& args, std::string& err);

/// Full CLI entry point (argument parsing plus dispatch).
int run_cli(int argc, const char* const* argv);

/// The verification suite behind cmd_verify; returns the report as JSON text
/// and whether every residual stayed within tol.
std::string verification_report(const FrameSystem& fs, int tests, double tol, std::uint64_t seed,
                                bool& pass);

}  // namespace padic
