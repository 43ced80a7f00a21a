#include "weilzeta/cli.hpp"

int main(int argc, char ** argv)
{
    return weilzeta::run_cli(argc, argv);
}
