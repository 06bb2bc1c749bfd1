from novikov_groebner.cli import main

main()
