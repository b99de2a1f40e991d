#pragma once

namespace cayley::cli {

// Exit codes: 0 all checks pass, 1 a check failed or was refused, 2 usage or
// spec error.
int run(int argc, char** argv);

}  // namespace cayley::cli
