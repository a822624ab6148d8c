#include "mbg/expr.hpp"

int main(int argc, char** argv) { return mbg::run_cli(argc, argv); }
