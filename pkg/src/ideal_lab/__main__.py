from ideal_lab.cli import main

raise SystemExit(main())
