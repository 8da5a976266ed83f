"""Tour of the command line interface.

Each step invokes mockq.cli.main with the same argv the installed `mockq`
console script would receive, and prints the command line first so the
output doubles as usage documentation.
"""

from mockq.cli import main


def run(*argv):
    print("$ mockq " + " ".join(argv))
    code = main(list(argv))
    print("(exit %d)" % code)
    print()


def demo():
    run("list")
    run("verify", "--id", "NEWOMEGA", "--order", "40")
    run("verify", "--id", "NEWF", "--order", "40", "--json")
    run("numeric", "--check", "t-transform", "--tau", "0.25+1i")
    run("coeffs", "--id", "FIDWAT", "--order", "3")
    # error handling: unknown ids exit with code 2 and name the valid choices
    run("verify", "--id", "TYPO")


if __name__ == "__main__":
    demo()
