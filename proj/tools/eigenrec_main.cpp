#include "eigenrec/cli.hpp"

int main(int argc, char** argv) { return eigenrec::run_cli(argc, argv); }
