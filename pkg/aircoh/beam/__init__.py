from .convert import *
from .base import *
from .typeone import *
from .typetwo import *
from .overlap import *
