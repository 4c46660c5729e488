#include "geompairs/cli.hpp"

int main(int argc, char** argv) {
    return geompairs::cli::main_entry(argc, argv);
}
