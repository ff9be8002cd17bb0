#include "thetaq/cli.hpp"

int main(int argc, char** argv) { return thetaq::cli::run(argc, argv); }
