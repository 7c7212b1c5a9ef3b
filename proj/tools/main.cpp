#include "mufold/cli.hpp"

int main(int argc, char** argv) { return mufold::main_entry(argc, argv); }
