#include <iostream>
#include <string>
#include <vector>

#include "homlr/cli_run.hpp"

namespace {

const char* kUsage = R"(homlr - hom-Lie-Rinehart computer algebra

usage: homlr <command> [options] <files...>

commands:
  check FILE                                axiom checks for any document kind
  cohomology --degree N BASE MODULE         dim H^N_{hLR}(L; M)
  extend --cocycle F BASE MODULE [--out X]  abelian extension from a 2-cocycle
  classify --left F --right G BASE MODULE   are two classes cohomologous?
  center FILE                               basis of Z_A(L)
  gerstenhaber FILE [--top K]               build wedge*_A L and check axioms
  bv-check FILE [--top K]                   BV generator d: d^2 = 0 + identity
  kaehler FILE                              universal phi-derivation I/I^2
  lie-derivative FILE XFILE                 L_X operator on D_A^phi

options:
  --sign-convention signed|printed          delta / bracket sign switch
  --degree N, --top K, --cocycle F, --left F, --right F, --out F

exit status: 0 = all checks pass, 1 = a check failed, 2 = input error
)";

} // namespace

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    if (args.empty() || args[0] == "--help" || args[0] == "-h" || args[0] == "help") {
        std::cout << kUsage;
        return args.empty() ? 2 : 0;
    }
    return homlr::cli::run(args, std::cout, std::cerr);
}
