# -*- coding: utf-8 -*-
from .copdyn import main

raise SystemExit(main())
