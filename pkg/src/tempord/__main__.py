"""支持 python -m tempord"""

from .main import main

main()
