# pinj
# SPDX-License-Identifier: MIT
from pinj.cli import main

if __name__ == '__main__':
    main()
