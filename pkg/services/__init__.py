# Services package: aritmética exata, avaliadores numéricos, configuração e relatório
