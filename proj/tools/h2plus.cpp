#include "h2plus/cli.h"

int main(int argc, char** argv) { return h2plus::cli::main(argc, argv); }
