from maxindep.cli import main

main()
