#include "rigidcert/cli.hpp"

int main(int argc, char** argv) { return rigidcert::run_cli(argc, argv); }
