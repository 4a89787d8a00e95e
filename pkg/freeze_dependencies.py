import os


def main():
    os.system("pip freeze --exclude graphic-sequences > frozen_dependencies.txt")


if __name__ == "__main__":
    main()
