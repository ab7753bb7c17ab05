import java.util.List;

public class LedgerRest {
    public void post(List<Account> accounts, List<Account> rest, List<Tx> txs) {
        for (Account acc : accounts) {
            for (Tx tx : txs) {
                acc.balance += tx.amount;
            }
            accounts = rest;
        }
    }
}
