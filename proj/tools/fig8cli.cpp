#include "fig8/cli.hpp"

int main(int argc, char** argv) { return fig8::cli_main(argc, argv); }
