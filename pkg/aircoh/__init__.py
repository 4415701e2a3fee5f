__version__ = '0.1.0'

from aircoh.errors import *
from aircoh.specfun import *
from aircoh.quad import *
from aircoh.coherence import *
from aircoh.beam import *
from aircoh.grid import *
from aircoh.util import *
