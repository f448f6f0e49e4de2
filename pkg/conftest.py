import os
import sys

# Os pacotes services/ e identities/ são importados a partir da raiz do repositório
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))
