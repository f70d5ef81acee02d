#include "labcli/app.hpp"

int main(int argc, char** argv) { return labcli::run_app(argc, argv); }
