import java.util.List;

public class Ledger {
    public void post(List<Account> accounts, List<Tx> txs) {
        for (Account acc : accounts) {
            for (Tx tx : txs) {
                acc.balance += tx.amount;
            }
        }
    }
}
