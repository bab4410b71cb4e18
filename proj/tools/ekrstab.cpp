// CLI entry point; subcommands are wired up in stages.
#include <iostream>

int main() {
    std::cerr << "ekrstab: no subcommands wired yet\n";
    return 2;
}
