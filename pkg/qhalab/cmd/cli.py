from qhalab.cli import create_app

app = create_app()


def main() -> None:
    app()


if __name__ == "__main__":
    main()
