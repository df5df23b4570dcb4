#pragma once

namespace eigenrec {

// argv follows main(). Returns the process exit code: 0 for success or an
// Identified probe, 1 for operational errors, 2 UnknownFace, 3 NotAFace.
int run_cli(int argc, const char* const* argv);

}  // namespace eigenrec
